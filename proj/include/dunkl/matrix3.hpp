#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "dunkl/radical.hpp"

namespace dunkl {

using Vector3 = std::array<RadicalComplex, 3>;

RadicalComplex inner(const Vector3& x, const Vector3& y);

// 3x3 matrix over Q(i, sqrt2, sqrt3); entries m[row][col].
class Matrix3 {
public:
    Matrix3() = default;

    static Matrix3 identity();
    static Matrix3 from_rows(const Vector3& r0, const Vector3& r1, const Vector3& r2);

    const RadicalComplex& at(int row, int col) const {
        return m_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    }
    void set(int row, int col, RadicalComplex v) {
        m_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = std::move(v);
    }

    friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
    friend Matrix3 operator+(const Matrix3& a, const Matrix3& b);
    friend Matrix3 operator-(const Matrix3& a, const Matrix3& b);
    Vector3 apply(const Vector3& x) const;

    Matrix3 transpose() const;
    RadicalComplex det() const;
    bool is_orthogonal() const;
    bool is_identity() const;

    friend bool operator==(const Matrix3& a, const Matrix3& b) { return a.m_ == b.m_; }
    friend bool operator!=(const Matrix3& a, const Matrix3& b) { return !(a == b); }
    friend bool operator<(const Matrix3& a, const Matrix3& b) { return a.m_ < b.m_; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Matrix3& m);

private:
    std::array<std::array<RadicalComplex, 3>, 3> m_{};
};

} // namespace dunkl
