#pragma once

#include "smap/qpoly.hpp"

#include <string>
#include <vector>

namespace smap {

/* element a*1 + b*eps of R(S2)[q]; eps is the sign representation */
struct EquivClass {
	QPoly trivial_part;
	QPoly sign_part;

	/* class of the space itself, forgetting the action */
	QPoly augmentation() const { return trivial_part + sign_part; }
	/* class of the quotient by the involution */
	QPoly invariant_part() const { return trivial_part; }
	friend EquivClass operator+(const EquivClass& a, const EquivClass& b);
	friend EquivClass operator*(const EquivClass& a, const EquivClass& b);
	friend bool operator==(const EquivClass& a, const EquivClass& b) = default;
	/* divide both parts by a class carrying the trivial action */
	EquivClass div_trivial(const QPoly& d) const;
	static EquivClass trivial(const QPoly& p) { return {p, QPoly()}; }
};

QPoly sigma2(const QPoly& p);
QPoly lambda2(const QPoly& p);
EquivClass equiv_serre_square(const QPoly& p);

/* the four signed pieces of the diagonal stratification of (P^1)^4
 * under the swap of the first two points */
struct M04Derivation {
	EquivClass product;        /* (P^1)^4 */
	EquivClass large_diagonals;
	EquivClass medium_diagonals;
	EquivClass small_diagonal;
	EquivClass configuration;  /* F(P^1,4), sum of the above */
	QPoly pgl2;
	EquivClass quotient;       /* configuration / pgl2 */
};

M04Derivation m04_derivation();
/* (q-1)*1 - eps; throws std::logic_error if the derivation does not close */
EquivClass equiv_serre_m04();

enum class SpaceKind {
	M00,          /* smooth-domain maps M_{0,0}(P^r,d), d > 0 */
	M0nConst,     /* M_{0,n}(P^r,0) = M_{0,n} x P^r */
	M0nLine,      /* M_{0,n}(P^r,1), an F(P^1,n)-bundle over M_{0,0}(P^r,1) */
	Config,       /* F(P^1,k) */
	Grass2,       /* G(2,n) */
	PointLineFlag,/* F(0,1;r) */
	PGL2,
	Proj,         /* P^r */
};

struct SpaceDescriptor {
	SpaceKind kind;
	long a = 0;  /* d for M00, n for M0n*, k for Config, n for Grass2 */
};

/* closed-form Serre polynomial; r is the target dimension where relevant */
QPoly serre_space(const SpaceDescriptor& s, long r);
std::string describe(const SpaceDescriptor& s);

enum class FactorKind { Plain, FiberSquare, M04 };

/* Plain: prod(numer)/prod(denom) with trivial action.
 * FiberSquare: equiv_serre_square(prod(numer)/prod(denom)).
 * M04: equiv_serre_m04(). */
struct StratumFactor {
	FactorKind kind = FactorKind::Plain;
	std::vector<SpaceDescriptor> numer;
	std::vector<SpaceDescriptor> denom;
};

struct Stratum {
	std::string label;
	std::vector<StratumFactor> factors;
	std::vector<SpaceDescriptor> base_divisors;
	bool swap_automorphism = false;
};

/* the ten degeneration strata of the two-pointed degree-2 space */
const std::vector<Stratum>& m02_strata();
EquivClass stratum_equiv_serre(const Stratum& s, long r);
QPoly stratum_serre(const Stratum& s, long r);

QPoly poincare_m02_strata(long r);
QPoly poincare_m02_closed(long r);
/* both computations; throws std::logic_error if they differ */
QPoly poincare_m02(long r);
QPoly poincare_m01(long r);

long flag_betti(long r, long i);
long betti_m02(long r, long j);
long expected_dim(long r, long d, long n);

}  // namespace smap
