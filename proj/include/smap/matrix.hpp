#pragma once

#include "smap/rational.hpp"

#include <vector>

namespace smap {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
public:
	RationalMatrix() = default;
	RationalMatrix(size_t rows, size_t cols);
	static RationalMatrix from_rows(const std::vector<RationalVector>& rows, size_t cols);
	static RationalMatrix identity(size_t n);

	size_t rows() const { return rows_; }
	size_t cols() const { return cols_; }
	Rational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
	const Rational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
	RationalVector row(size_t i) const;
	void append_row(const RationalVector& r);

	RationalVector apply(const RationalVector& v) const;
	friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
	size_t rows_ = 0;
	size_t cols_ = 0;
	std::vector<Rational> data_;
};

struct RrefResult {
	RationalMatrix matrix;
	size_t rank = 0;
	std::vector<size_t> pivot_cols;
};

RrefResult rref(const RationalMatrix& m);

/* right null space; each vector scaled so its first nonzero entry is 1 */
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/* scale so the first nonzero entry is 1; zero vectors are left alone */
RationalVector normalize_leading(RationalVector v);

}  // namespace smap
