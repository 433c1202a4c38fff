#include "smap/matrix.hpp"

#include <stdexcept>

namespace smap {

RationalMatrix::RationalMatrix(size_t rows, size_t cols)
	: rows_(rows), cols_(cols), data_(rows * cols)
{
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, size_t cols)
{
	RationalMatrix m(0, cols);
	for (const auto& r : rows)
		m.append_row(r);
	return m;
}

RationalMatrix RationalMatrix::identity(size_t n)
{
	RationalMatrix m(n, n);
	for (size_t i = 0; i < n; ++i)
		m.at(i, i) = 1;
	return m;
}

RationalVector RationalMatrix::row(size_t i) const
{
	return RationalVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void RationalMatrix::append_row(const RationalVector& r)
{
	if (r.size() != cols_)
		throw std::invalid_argument("row length does not match column count");
	data_.insert(data_.end(), r.begin(), r.end());
	++rows_;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const
{
	if (v.size() != cols_)
		throw std::invalid_argument("vector length does not match column count");
	RationalVector out(rows_);
	for (size_t i = 0; i < rows_; ++i)
		for (size_t j = 0; j < cols_; ++j)
			if (at(i, j) != 0 && v[j] != 0)
				out[i] += at(i, j) * v[j];
	return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b)
{
	return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const RationalMatrix& m)
{
	RrefResult res;
	res.matrix = m;
	RationalMatrix& a = res.matrix;
	size_t r = 0;
	for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
		size_t p = r;
		while (p < a.rows() && a.at(p, c) == 0)
			++p;
		if (p == a.rows())
			continue;
		if (p != r)
			for (size_t j = 0; j < a.cols(); ++j)
				swap(a.at(p, j), a.at(r, j));
		Rational inv = 1 / a.at(r, c);
		for (size_t j = c; j < a.cols(); ++j)
			a.at(r, j) *= inv;
		for (size_t i = 0; i < a.rows(); ++i) {
			if (i == r || a.at(i, c) == 0)
				continue;
			Rational f = a.at(i, c);
			for (size_t j = c; j < a.cols(); ++j)
				if (a.at(r, j) != 0)
					a.at(i, j) -= f * a.at(r, j);
		}
		res.pivot_cols.push_back(c);
		++r;
	}
	res.rank = r;
	return res;
}

RationalVector normalize_leading(RationalVector v)
{
	for (const auto& x : v) {
		if (x != 0) {
			Rational inv = 1 / x;
			for (auto& y : v)
				y *= inv;
			break;
		}
	}
	return v;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m)
{
	RrefResult red = rref(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (size_t c : red.pivot_cols)
		is_pivot[c] = true;
	std::vector<RationalVector> basis;
	for (size_t f = 0; f < m.cols(); ++f) {
		if (is_pivot[f])
			continue;
		RationalVector v(m.cols());
		v[f] = 1;
		for (size_t i = 0; i < red.rank; ++i)
			v[red.pivot_cols[i]] = -red.matrix.at(i, f);
		basis.push_back(normalize_leading(std::move(v)));
	}
	return basis;
}

}  // namespace smap
