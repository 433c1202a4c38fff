#pragma once

#include "smap/multipoly.hpp"
#include "smap/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace smap {

/* torus weights lambda_0..lambda_r at a rational specialization */
struct LambdaSpec {
	std::vector<Rational> lambda;

	LambdaSpec(std::initializer_list<Rational> l);
	explicit LambdaSpec(std::vector<Rational> l);
	size_t r() const { return lambda.size() - 1; }
};

/* a + b*psi with psi^2 = 0 */
class PsiJet {
public:
	PsiJet() = default;
	PsiJet(const Rational& a) : a_(a) {}
	PsiJet(const Rational& a, const Rational& b) : a_(a), b_(b) {}
	static PsiJet psi() { return {0, 1}; }

	const Rational& const_part() const { return a_; }
	const Rational& psi_part() const { return b_; }

	friend PsiJet operator+(const PsiJet& x, const PsiJet& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
	friend PsiJet operator-(const PsiJet& x, const PsiJet& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
	friend PsiJet operator*(const PsiJet& x, const PsiJet& y)
	{
		return {x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_};
	}
	/* throws std::domain_error when the constant part of y vanishes */
	friend PsiJet operator/(const PsiJet& x, const PsiJet& y);
	PsiJet operator-() const { return {-a_, -b_}; }
	PsiJet pow(unsigned e) const;
	friend bool operator==(const PsiJet& x, const PsiJet& y) = default;

	std::string to_string() const;

private:
	Rational a_ = 0;
	Rational b_ = 0;
};

/* vertex = connected piece of the domain over fixed point `label`,
 * edge = degree-d cover of the line joining the labels of its ends */
struct FixedGraph {
	struct Edge {
		int u;
		int v;
		int degree;
	};

	int n = 0;
	int d = 0;
	int r = 1;
	std::vector<int> label;
	std::vector<std::vector<int>> markings;
	std::vector<Edge> edges;

	size_t nvertices() const { return label.size(); }
	int valence(int v) const;
	/* |S_v| + val(v) */
	int special_points(int v) const;
	/* edges incident to v, in edge order */
	std::vector<int> incident(int v) const;
	int other_end(int e, int v) const;
	bool has_m04_vertex() const;

	std::string canonical() const;
	/* path notation "1{1}-1-0{2}-1-1"; falls back to an edge list for non-paths */
	std::string describe() const;
};

/* parse path notation such as "0{1,2}-2-1" */
FixedGraph parse_fixed_graph(const std::string& s, int n, int d, int r = 1);

std::vector<FixedGraph> enumerate_fixed_graphs(int n, int d, int r);
long aut_order(const FixedGraph& g);
PsiJet euler_normal(const FixedGraph& g, const LambdaSpec& spec);

/* one side of a boundary divisor: the markings and degree on that side */
struct Splitting {
	std::set<int> markings;
	int degree = 0;
	friend bool operator==(const Splitting& a, const Splitting& b) = default;
};

/* put the side containing marking 1 first (or the lower degree when unmarked) */
Splitting normalize_splitting(const Splitting& s, int n, int d);

struct DivisorSymbol {
	enum class Kind { Hyperplane, Boundary };
	std::string name;
	Kind kind = Kind::Hyperplane;
	int marking = 0;
	Splitting side;
};

/* a moduli space of stable maps to P^1 with a named list of divisor symbols */
struct LocalizationSpace {
	std::string id;
	int n = 0;
	int d = 0;
	int r = 1;
	std::vector<DivisorSymbol> symbols;
	/* golden fixed-graph order, may be empty */
	std::vector<std::string> reference_graphs;

	int dimension() const;
	std::vector<std::string> symbol_names() const;
	const DivisorSymbol& symbol(const std::string& name) const;
};

const LocalizationSpace& localization_space(const std::string& id);
std::vector<std::string> localization_space_ids();

/* graphs in reference order when the space has one, enumeration order otherwise */
std::vector<FixedGraph> space_graphs(const LocalizationSpace& space);

/* index of g in the reference order, if listed */
std::optional<size_t> reference_index(const LocalizationSpace& space, const FixedGraph& g);

/* restriction computed by node smoothing; for graphs of a space with a
 * reference restriction table, the table entry is compared and a mismatch
 * throws std::logic_error */
PsiJet restrict_class(const LocalizationSpace& space, const FixedGraph& g,
                      const DivisorSymbol& c, const LambdaSpec& spec);
PsiJet restrict_class_rules(const FixedGraph& g, const DivisorSymbol& c, const LambdaSpec& spec);

/* reference restriction entry as (coeff of lambda0, coeff of lambda1, coeff of psi) */
struct LinearWeight {
	Rational l0, l1, psi;
	PsiJet at(const LambdaSpec& spec) const { return {l0 * spec.lambda[0] + l1 * spec.lambda[1], psi}; }
};
std::optional<LinearWeight> reference_restriction(const std::string& space_id, size_t graph_index,
                                                  const std::string& symbol);

/* exponents follow space.symbols order */
Rational integrate_monomial(const LocalizationSpace& space, const Exponents& exps,
                            const LambdaSpec& spec);
/* evaluates at two specializations and throws std::logic_error if they differ */
Rational integrate_monomial_checked(const LocalizationSpace& space, const Exponents& exps);

const LambdaSpec& default_spec_a();
const LambdaSpec& default_spec_b();

struct IntegralEntry {
	Exponents exponents;
	std::string monomial;
	Rational value;
	/* nonempty when a vanishing or symmetry rule also determines the value */
	std::string rule;
};

std::vector<IntegralEntry> integrals_table(const std::string& space_id);

}  // namespace smap
