#include "smap/localization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace smap {

LambdaSpec::LambdaSpec(std::initializer_list<Rational> l) : LambdaSpec(std::vector<Rational>(l)) {}

LambdaSpec::LambdaSpec(std::vector<Rational> l) : lambda(std::move(l))
{
	if (lambda.size() < 2)
		throw std::invalid_argument("a weight specialization needs at least two weights");
	for (size_t i = 0; i < lambda.size(); ++i)
		for (size_t j = i + 1; j < lambda.size(); ++j)
			if (lambda[i] == lambda[j])
				throw std::invalid_argument("weights must be pairwise distinct");
}

PsiJet operator/(const PsiJet& x, const PsiJet& y)
{
	if (y.a_ == 0)
		throw std::domain_error("division by a nilpotent psi-jet");
	Rational inv = 1 / y.a_;
	return {x.a_ * inv, x.b_ * inv - x.a_ * y.b_ * inv * inv};
}

PsiJet PsiJet::pow(unsigned e) const
{
	PsiJet r(1);
	for (unsigned i = 0; i < e; ++i)
		r = r * *this;
	return r;
}

std::string PsiJet::to_string() const
{
	if (b_ == 0)
		return smap::to_string(a_);
	std::string s = a_ == 0 ? "" : smap::to_string(a_);
	if (b_ < 0)
		s += "-";
	else if (!s.empty())
		s += "+";
	Rational m = abs(b_);
	if (m != 1)
		s += smap::to_string(m) + "*";
	return s + "psi";
}

/* ---- graphs ---- */

int FixedGraph::valence(int v) const
{
	int k = 0;
	for (const auto& e : edges)
		k += (e.u == v) + (e.v == v);
	return k;
}

int FixedGraph::special_points(int v) const
{
	return static_cast<int>(markings[v].size()) + valence(v);
}

std::vector<int> FixedGraph::incident(int v) const
{
	std::vector<int> out;
	for (size_t i = 0; i < edges.size(); ++i)
		if (edges[i].u == v || edges[i].v == v)
			out.push_back(static_cast<int>(i));
	return out;
}

int FixedGraph::other_end(int e, int v) const
{
	return edges[e].u == v ? edges[e].v : edges[e].u;
}

bool FixedGraph::has_m04_vertex() const
{
	for (size_t v = 0; v < nvertices(); ++v)
		if (special_points(static_cast<int>(v)) == 4)
			return true;
	return false;
}

static std::string vertex_text(const FixedGraph& g, int v)
{
	std::string s = std::to_string(g.label[v]);
	if (!g.markings[v].empty()) {
		s += '{';
		for (size_t i = 0; i < g.markings[v].size(); ++i)
			s += (i ? "," : "") + std::to_string(g.markings[v][i]);
		s += '}';
	}
	return s;
}

static std::string rooted_code(const FixedGraph& g, int v, int parent_edge)
{
	std::vector<std::string> kids;
	for (int e : g.incident(v)) {
		if (e == parent_edge)
			continue;
		kids.push_back("<" + std::to_string(g.edges[e].degree) + ">" +
		               rooted_code(g, g.other_end(e, v), e));
	}
	std::sort(kids.begin(), kids.end());
	std::string s = vertex_text(g, v) + "(";
	for (const auto& k : kids)
		s += k;
	return s + ")";
}

static int subtree_size(const FixedGraph& g, int v, int parent_edge)
{
	int s = 1;
	for (int e : g.incident(v))
		if (e != parent_edge)
			s += subtree_size(g, g.other_end(e, v), e);
	return s;
}

std::string FixedGraph::canonical() const
{
	const int nv = static_cast<int>(nvertices());
	/* centroids: vertices whose largest branch has at most nv/2 vertices */
	std::vector<int> centroids;
	for (int v = 0; v < nv; ++v) {
		int largest = 0;
		for (int e : incident(v))
			largest = std::max(largest, subtree_size(*this, other_end(e, v), e));
		if (2 * largest <= nv)
			centroids.push_back(v);
	}
	std::string best;
	for (int c : centroids) {
		std::string code = rooted_code(*this, c, -1);
		if (best.empty() || code < best)
			best = code;
	}
	return best;
}

std::string FixedGraph::describe() const
{
	const int nv = static_cast<int>(nvertices());
	bool path = true;
	for (int v = 0; v < nv; ++v)
		path = path && valence(v) <= 2;
	if (!path || nv == 0) {
		std::string s;
		for (const auto& e : edges)
			s += (s.empty() ? "" : " ") + vertex_text(*this, e.u) + "-" + std::to_string(e.degree) +
			     "-" + vertex_text(*this, e.v);
		return s;
	}
	std::string best;
	for (int start = 0; start < nv; ++start) {
		if (valence(start) > 1)
			continue;
		std::string s = vertex_text(*this, start);
		int v = start, prev = -1;
		while (true) {
			int next_edge = -1;
			for (int e : incident(v))
				if (e != prev)
					next_edge = e;
			if (next_edge < 0)
				break;
			v = other_end(next_edge, v);
			prev = next_edge;
			s += "-" + std::to_string(edges[next_edge].degree) + "-" + vertex_text(*this, v);
		}
		if (best.empty() || s < best)
			best = s;
	}
	return best;
}

FixedGraph parse_fixed_graph(const std::string& s, int n, int d, int r)
{
	FixedGraph g;
	g.n = n;
	g.d = d;
	g.r = r;
	size_t pos = 0;
	auto read_int = [&]() {
		size_t start = pos;
		while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
			++pos;
		if (start == pos)
			throw std::invalid_argument("bad graph notation: " + s);
		return std::stoi(s.substr(start, pos - start));
	};
	auto read_vertex = [&]() {
		g.label.push_back(read_int());
		std::vector<int> marks;
		if (pos < s.size() && s[pos] == '{') {
			++pos;
			while (true) {
				marks.push_back(read_int());
				if (pos < s.size() && s[pos] == ',') {
					++pos;
					continue;
				}
				if (pos < s.size() && s[pos] == '}') {
					++pos;
					break;
				}
				throw std::invalid_argument("bad graph notation: " + s);
			}
		}
		std::sort(marks.begin(), marks.end());
		g.markings.push_back(marks);
	};
	read_vertex();
	while (pos < s.size()) {
		if (s[pos] != '-')
			throw std::invalid_argument("bad graph notation: " + s);
		++pos;
		int deg = read_int();
		if (pos >= s.size() || s[pos] != '-')
			throw std::invalid_argument("bad graph notation: " + s);
		++pos;
		read_vertex();
		int v = static_cast<int>(g.label.size()) - 1;
		g.edges.push_back({v - 1, v, deg});
	}
	return g;
}

/* Pruefer decoding for trees on m >= 2 vertices */
static std::vector<std::pair<int, int>> tree_from_code(const std::vector<int>& code, int m)
{
	std::vector<std::pair<int, int>> out;
	if (m == 2) {
		out.emplace_back(0, 1);
		return out;
	}
	std::vector<int> deg(m, 1);
	for (int x : code)
		++deg[x];
	for (int x : code) {
		for (int leaf = 0; leaf < m; ++leaf) {
			if (deg[leaf] == 1) {
				out.emplace_back(leaf, x);
				--deg[leaf];
				--deg[x];
				break;
			}
		}
	}
	int u = -1, w = -1;
	for (int i = 0; i < m; ++i) {
		if (deg[i] == 1) {
			if (u < 0)
				u = i;
			else
				w = i;
		}
	}
	out.emplace_back(u, w);
	return out;
}

/* calls f on every vector in {0..base-1}^len */
static void for_each_tuple(int len, int base, const std::function<void(const std::vector<int>&)>& f)
{
	std::vector<int> t(len, 0);
	if (base <= 0 && len > 0)
		return;
	while (true) {
		f(t);
		int i = 0;
		while (i < len && ++t[i] == base)
			t[i++] = 0;
		if (i == len)
			return;
	}
}

std::vector<FixedGraph> enumerate_fixed_graphs(int n, int d, int r)
{
	if (d < 1 || r < 1 || n < 0)
		throw std::invalid_argument("enumeration needs d >= 1, r >= 1, n >= 0");
	std::map<std::pair<size_t, std::string>, FixedGraph> found;
	for (int ne = 1; ne <= d; ++ne) {
		const int m = ne + 1;
		for_each_tuple(m - 2, m, [&](const std::vector<int>& code) {
			auto tree = tree_from_code(code, m);
			for_each_tuple(m, r + 1, [&](const std::vector<int>& labels) {
				for (const auto& [a, b] : tree)
					if (labels[a] == labels[b])
						return;
				for_each_tuple(ne, d, [&](const std::vector<int>& degm1) {
					int total = 0;
					for (int x : degm1)
						total += x + 1;
					if (total != d)
						return;
					for_each_tuple(n, m, [&](const std::vector<int>& where) {
						FixedGraph g;
						g.n = n;
						g.d = d;
						g.r = r;
						g.label = labels;
						g.markings.assign(m, {});
						for (int i = 0; i < n; ++i)
							g.markings[where[i]].push_back(i + 1);
						for (int e = 0; e < ne; ++e)
							g.edges.push_back({tree[e].first, tree[e].second, degm1[e] + 1});
						found.emplace(std::make_pair(g.edges.size(), g.canonical()), g);
					});
				});
			});
		});
	}
	std::vector<FixedGraph> out;
	for (auto& [key, g] : found)
		out.push_back(std::move(g));
	return out;
}

long aut_order(const FixedGraph& g)
{
	long sheets = 1;
	for (const auto& e : g.edges)
		sheets *= e.degree;
	const int nv = static_cast<int>(g.nvertices());
	std::vector<int> perm(nv);
	std::iota(perm.begin(), perm.end(), 0);
	auto edge_key = [](int a, int b, int deg) {
		return std::make_tuple(std::min(a, b), std::max(a, b), deg);
	};
	std::multiset<std::tuple<int, int, int>> edge_set;
	for (const auto& e : g.edges)
		edge_set.insert(edge_key(e.u, e.v, e.degree));
	long autos = 0;
	do {
		bool ok = true;
		for (int v = 0; v < nv && ok; ++v)
			ok = g.label[perm[v]] == g.label[v] && g.markings[perm[v]] == g.markings[v];
		if (!ok)
			continue;
		std::multiset<std::tuple<int, int, int>> image;
		for (const auto& e : g.edges)
			image.insert(edge_key(perm[e.u], perm[e.v], e.degree));
		if (image == edge_set)
			++autos;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return sheets * autos;
}

static Rational weight_diff(const LambdaSpec& s, int i, int j)
{
	return s.lambda.at(i) - s.lambda.at(j);
}

/* tangent weight of the edge e at its end v */
static Rational omega(const FixedGraph& g, int e, int v, const LambdaSpec& s)
{
	return weight_diff(s, g.label[v], g.label[g.other_end(e, v)]) / g.edges[e].degree;
}

static void check_supported(const FixedGraph& g)
{
	int m04 = 0;
	for (size_t v = 0; v < g.nvertices(); ++v) {
		int k = g.special_points(static_cast<int>(v));
		if (k > 4)
			throw std::invalid_argument("fixed locus with a contracted M_{0,>=5} component is not supported");
		m04 += k == 4;
	}
	if (m04 > 1)
		throw std::invalid_argument("fixed locus with two M_{0,4} components is not supported");
}

PsiJet euler_normal(const FixedGraph& g, const LambdaSpec& spec)
{
	if (static_cast<int>(spec.r()) != g.r)
		throw std::invalid_argument("weight specialization does not match target dimension");
	check_supported(g);
	const int nv = static_cast<int>(g.nvertices());

	PsiJet flags_num(1);
	Rational flags_den = 1;
	for (int v = 0; v < nv; ++v) {
		const int k = g.special_points(v);
		for (int e : g.incident(v)) {
			if (k >= 3)
				flags_num = flags_num * (PsiJet(omega(g, e, v, spec)) - (k == 4 ? PsiJet::psi() : PsiJet()));
			for (int j = 0; j <= g.r; ++j)
				if (j != g.label[v])
					flags_den *= weight_diff(spec, g.label[v], j);
		}
	}

	Rational vert = 1;
	for (int v = 0; v < nv; ++v) {
		for (int j = 0; j <= g.r; ++j)
			if (j != g.label[v])
				vert *= weight_diff(spec, g.label[v], j);
		if (!g.markings[v].empty())
			continue;
		auto inc = g.incident(v);
		if (inc.size() == 2)
			vert *= omega(g, inc[0], v, spec) + omega(g, inc[1], v, spec);
		else if (inc.size() == 1)
			vert /= omega(g, inc[0], v, spec);
	}

	Rational edge = 1;
	for (const auto& e : g.edges) {
		const int a = g.label[e.u], b = g.label[e.v];
		const long d = e.degree;
		Rational fact = 1;
		for (long i = 2; i <= d; ++i)
			fact *= i;
		Rational diff = weight_diff(spec, a, b);
		Rational term = (d % 2 ? -1 : 1) * fact * fact;
		for (long i = 0; i < 2 * d; ++i)
			term *= diff / d;
		for (int k = 0; k <= g.r; ++k) {
			if (k == a || k == b)
				continue;
			for (long x = 0; x <= d; ++x)
				term *= ratio(x, d) * spec.lambda[a] + ratio(d - x, d) * spec.lambda[b] -
				        spec.lambda[k];
		}
		edge *= term;
	}

	return flags_num * PsiJet(vert * edge / flags_den);
}

Splitting normalize_splitting(const Splitting& s, int n, int d)
{
	Splitting c;
	for (int i = 1; i <= n; ++i)
		if (!s.markings.count(i))
			c.markings.insert(i);
	c.degree = d - s.degree;
	if (n > 0)
		return s.markings.count(1) ? s : c;
	return s.degree <= c.degree ? s : c;
}

/* markings and degree of the part of the tree reached through edge e away from v */
static Splitting branch(const FixedGraph& g, int e, int v)
{
	Splitting s;
	std::function<void(int, int)> walk = [&](int w, int via) {
		s.degree += g.edges[via].degree;
		s.markings.insert(g.markings[w].begin(), g.markings[w].end());
		for (int f : g.incident(w))
			if (f != via)
				walk(g.other_end(f, w), f);
	};
	walk(g.other_end(e, v), e);
	return s;
}

PsiJet restrict_class_rules(const FixedGraph& g, const DivisorSymbol& c, const LambdaSpec& spec)
{
	if (c.kind == DivisorSymbol::Kind::Hyperplane) {
		for (size_t v = 0; v < g.nvertices(); ++v)
			for (int m : g.markings[v])
				if (m == c.marking)
					return PsiJet(spec.lambda.at(g.label[v]));
		throw std::invalid_argument("marking " + std::to_string(c.marking) + " not on graph");
	}
	check_supported(g);
	const Splitting target = normalize_splitting(c.side, g.n, g.d);
	auto matches = [&](const Splitting& s) { return normalize_splitting(s, g.n, g.d) == target; };

	PsiJet total;
	for (int v = 0; v < static_cast<int>(g.nvertices()); ++v) {
		const int k = g.special_points(v);
		auto inc = g.incident(v);
		if (g.markings[v].empty() && inc.size() == 2) {
			/* node where two edge components meet over a fixed point */
			if (matches(branch(g, inc[0], v)))
				total = total + PsiJet(omega(g, inc[0], v, spec) + omega(g, inc[1], v, spec));
			continue;
		}
		if (k < 3)
			continue;
		/* contracted component: one node per incident edge */
		for (int e : inc)
			if (matches(branch(g, e, v)))
				total = total + PsiJet(omega(g, e, v, spec)) - (k == 4 ? PsiJet::psi() : PsiJet());
		if (k != 4)
			continue;
		/* boundary points of the M_{0,4} component */
		std::vector<Splitting> pts;
		for (int m : g.markings[v])
			pts.push_back(Splitting{{m}, 0});
		for (int e : inc)
			pts.push_back(branch(g, e, v));
		for (int j = 1; j < 4; ++j) {
			Splitting side = pts[0];
			side.markings.insert(pts[j].markings.begin(), pts[j].markings.end());
			side.degree += pts[j].degree;
			if (matches(side))
				total = total + PsiJet::psi();
		}
	}
	return total;
}

/* ---- spaces ---- */

int LocalizationSpace::dimension() const
{
	return d + r + d * r + n - 3;
}

std::vector<std::string> LocalizationSpace::symbol_names() const
{
	std::vector<std::string> out;
	for (const auto& s : symbols)
		out.push_back(s.name);
	return out;
}

const DivisorSymbol& LocalizationSpace::symbol(const std::string& name) const
{
	for (const auto& s : symbols)
		if (s.name == name)
			return s;
	throw std::invalid_argument("symbol " + name + " does not belong to space " + id);
}

static DivisorSymbol hyper(int i)
{
	return {"H" + std::to_string(i), DivisorSymbol::Kind::Hyperplane, i, {}};
}

static DivisorSymbol boundary(const std::string& name, std::set<int> marks, int deg)
{
	return {name, DivisorSymbol::Kind::Boundary, 0, Splitting{std::move(marks), deg}};
}

static const std::vector<LocalizationSpace>& spaces()
{
	static const std::vector<LocalizationSpace> all = {
		{"m01d1", 1, 1, 1, {hyper(1)}, {}},
		{"m02d1", 2, 1, 1, {hyper(1), hyper(2)}, {}},
		{"m03d1", 3, 1, 1, {hyper(1), hyper(2), hyper(3), boundary("D", {1, 2, 3}, 0)}, {}},
		{"m01d2",
		 1,
		 2,
		 1,
		 {hyper(1), boundary("D", {1}, 1)},
		 {"0{1}-2-1", "1{1}-2-0", "1{1}-1-0-1-1", "0{1}-1-1-1-0", "1-1-0{1}-1-1", "0-1-1{1}-1-0"}},
		{"m02d2",
		 2,
		 2,
		 1,
		 {hyper(1), hyper(2), boundary("D0", {1, 2}, 0), boundary("D1", {1, 2}, 1),
		  boundary("D2", {1}, 1)},
		 {"0{1}-2-1{2}", "0{2}-2-1{1}", "0{1,2}-2-1", "0-2-1{1,2}", "1{1,2}-1-0-1-1",
		  "0{1,2}-1-1-1-0", "1{1}-1-0{2}-1-1", "0{1}-1-1{2}-1-0", "1{2}-1-0{1}-1-1",
		  "0{2}-1-1{1}-1-0", "1-1-0{1,2}-1-1", "0-1-1{1,2}-1-0", "1{1}-1-0-1-1{2}",
		  "0{1}-1-1-1-0{2}"}},
	};
	return all;
}

const LocalizationSpace& localization_space(const std::string& id)
{
	for (const auto& s : spaces())
		if (s.id == id)
			return s;
	throw std::invalid_argument("unknown space " + id);
}

std::vector<std::string> localization_space_ids()
{
	std::vector<std::string> out;
	for (const auto& s : spaces())
		out.push_back(s.id);
	return out;
}

std::vector<FixedGraph> space_graphs(const LocalizationSpace& space)
{
	auto graphs = enumerate_fixed_graphs(space.n, space.d, space.r);
	if (space.reference_graphs.empty())
		return graphs;
	if (graphs.size() != space.reference_graphs.size())
		throw std::logic_error("fixed graph count differs from the reference list for " + space.id);
	std::vector<FixedGraph> ordered;
	for (const auto& ref : space.reference_graphs) {
		std::string code = parse_fixed_graph(ref, space.n, space.d, space.r).canonical();
		auto it = std::find_if(graphs.begin(), graphs.end(),
		                       [&](const FixedGraph& g) { return g.canonical() == code; });
		if (it == graphs.end())
			throw std::logic_error("reference graph " + ref + " not found by enumeration");
		ordered.push_back(*it);
	}
	return ordered;
}

std::optional<size_t> reference_index(const LocalizationSpace& space, const FixedGraph& g)
{
	const std::string code = g.canonical();
	for (size_t i = 0; i < space.reference_graphs.size(); ++i)
		if (parse_fixed_graph(space.reference_graphs[i], space.n, space.d, space.r).canonical() == code)
			return i;
	return std::nullopt;
}

std::optional<LinearWeight> reference_restriction(const std::string& space_id, size_t idx,
                                                  const std::string& symbol)
{
	using W = LinearWeight;
	const W L0{1, 0, 0}, L1{0, 1, 0}, Z{0, 0, 0}, T{1, -1, 0}, mT{-1, 1, 0};
	auto scaled = [](const W& w, const Rational& c) { return W{w.l0 * c, w.l1 * c, w.psi * c}; };
	static const std::map<std::string, std::vector<W>> m01 = {
		{"H1", {L0, L1, L1, L0, L0, L1}},
		{"D", {Z, Z, scaled(T, 2), scaled(mT, 2), scaled(T, 2), scaled(mT, 2)}},
	};
	const W psi{0, 0, 1};
	static const std::map<std::string, std::vector<W>> m02 = {
		{"H1", {L0, L1, L0, L1, L1, L0, L1, L0, L0, L1, L0, L1, L1, L0}},
		{"H2", {L1, L0, L0, L1, L1, L0, L0, L1, L1, L0, L0, L1, L1, L0}},
		{"D0", {Z, Z, scaled(T, Rational(1, 2)), scaled(mT, Rational(1, 2)), mT, T, Z, Z, Z, Z, psi, psi, Z, Z}},
		{"D1",
		 {Z, Z, Z, Z, scaled(T, 2), scaled(mT, 2), T, mT, T, mT, W{2, -2, -2}, W{-2, 2, -2}, Z, Z}},
		{"D2",
		 {Z, Z, Z, Z, Z, Z, T, mT, T, mT, scaled(psi, 2), scaled(psi, 2), scaled(T, 2), scaled(mT, 2)}},
	};
	const std::map<std::string, std::vector<W>>* table = nullptr;
	if (space_id == "m01d2")
		table = &m01;
	else if (space_id == "m02d2")
		table = &m02;
	if (!table)
		return std::nullopt;
	auto it = table->find(symbol);
	if (it == table->end() || idx >= it->second.size())
		return std::nullopt;
	return it->second[idx];
}

PsiJet restrict_class(const LocalizationSpace& space, const FixedGraph& g, const DivisorSymbol& c,
                      const LambdaSpec& spec)
{
	PsiJet v = restrict_class_rules(g, c, spec);
	if (auto idx = reference_index(space, g)) {
		if (auto ref = reference_restriction(space.id, *idx, c.name)) {
			if (!(ref->at(spec) == v))
				throw std::logic_error("restriction of " + c.name + " to " + g.describe() + " is " +
				                       v.to_string() + ", reference table says " +
				                       ref->at(spec).to_string());
		}
	}
	return v;
}

Rational integrate_monomial(const LocalizationSpace& space, const Exponents& exps, const LambdaSpec& spec)
{
	if (exps.size() != space.symbols.size())
		throw std::invalid_argument("exponent vector does not match the symbol list");
	int deg = std::accumulate(exps.begin(), exps.end(), 0);
	if (deg != space.dimension())
		throw std::invalid_argument("integrand degree " + std::to_string(deg) + " differs from dimension " +
		                            std::to_string(space.dimension()));
	Rational sum = 0;
	for (const auto& g : space_graphs(space)) {
		PsiJet num(1);
		for (size_t i = 0; i < exps.size(); ++i)
			if (exps[i])
				num = num * restrict_class(space, g, space.symbols[i], spec).pow(exps[i]);
		PsiJet val = num / (PsiJet(Rational(aut_order(g))) * euler_normal(g, spec));
		if (g.has_m04_vertex()) {
			sum += val.psi_part();
		} else {
			if (val.psi_part() != 0)
				throw std::logic_error("psi term on an isolated fixed point");
			sum += val.const_part();
		}
	}
	return sum;
}

const LambdaSpec& default_spec_a()
{
	static const LambdaSpec s{1, 0};
	return s;
}

const LambdaSpec& default_spec_b()
{
	static const LambdaSpec s{3, -2};
	return s;
}

Rational integrate_monomial_checked(const LocalizationSpace& space, const Exponents& exps)
{
	Rational a = integrate_monomial(space, exps, default_spec_a());
	Rational b = integrate_monomial(space, exps, default_spec_b());
	if (a != b)
		throw std::logic_error("integral depends on the weight specialization");
	return a;
}

/* value forced by a vanishing or symmetry rule, expressed as a partner monomial or zero */
struct RuleHit {
	std::string name;
	std::optional<Exponents> partner;
};

static std::optional<RuleHit> integral_rule(const LocalizationSpace& space, const Exponents& e)
{
	auto idx = [&](const std::string& n) -> int {
		for (size_t i = 0; i < space.symbols.size(); ++i)
			if (space.symbols[i].name == n)
				return static_cast<int>(i);
		return -1;
	};
	for (size_t i = 0; i < space.symbols.size(); ++i)
		if (space.symbols[i].kind == DivisorSymbol::Kind::Hyperplane && e[i] >= 2)
			return RuleHit{space.symbols[i].name + "^2=0", std::nullopt};
	if (space.id != "m02d2")
		return std::nullopt;
	int h1 = idx("H1"), h2 = idx("H2"), d0 = idx("D0"), d2 = idx("D2");
	if (e[h1] && e[h2] && e[d0])
		return RuleHit{"H1*H2*D0=0", std::nullopt};
	if (e[d0] && e[d2])
		return RuleHit{"D0*D2=0", std::nullopt};
	if (e[d0] && e[h2] && !e[h1]) {
		Exponents p = e;
		p[h2] -= 1;
		p[h1] += 1;
		return RuleHit{"D0*H2=D0*H1", p};
	}
	return std::nullopt;
}

std::vector<IntegralEntry> integrals_table(const std::string& space_id)
{
	const LocalizationSpace& space = localization_space(space_id);
	MultiPoly names(space.symbol_names());
	std::vector<IntegralEntry> out;
	std::map<Exponents, Rational> computed;
	for (const auto& e : monomials_of_degree(space.symbols.size(), space.dimension())) {
		IntegralEntry entry{e, names.monomial_string(e), integrate_monomial_checked(space, e), ""};
		computed[e] = entry.value;
		out.push_back(std::move(entry));
	}
	for (auto& entry : out) {
		auto hit = integral_rule(space, entry.exponents);
		if (!hit)
			continue;
		Rational expected = hit->partner ? computed.at(*hit->partner) : Rational(0);
		if (expected != entry.value)
			throw std::logic_error("rule " + hit->name + " disagrees with the graph sum for " + entry.monomial);
		entry.rule = hit->name;
	}
	return out;
}

}  // namespace smap
