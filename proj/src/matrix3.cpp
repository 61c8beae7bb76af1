#include "dunkl/matrix3.hpp"

#include <ostream>

namespace dunkl {

RadicalComplex inner(const Vector3& x, const Vector3& y) {
    RadicalComplex out;
    for (int k = 0; k < 3; ++k) out += x[static_cast<std::size_t>(k)] * y[static_cast<std::size_t>(k)];
    return out;
}

Matrix3 Matrix3::identity() {
    Matrix3 out;
    for (int k = 0; k < 3; ++k) out.set(k, k, RadicalComplex(1));
    return out;
}

Matrix3 Matrix3::from_rows(const Vector3& r0, const Vector3& r1, const Vector3& r2) {
    Matrix3 out;
    out.m_[0] = r0;
    out.m_[1] = r1;
    out.m_[2] = r2;
    return out;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            RadicalComplex s;
            for (int k = 0; k < 3; ++k) s += a.at(i, k) * b.at(k, j);
            out.set(i, j, std::move(s));
        }
    return out;
}

Matrix3 operator+(const Matrix3& a, const Matrix3& b) {
    Matrix3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
    return out;
}

Matrix3 operator-(const Matrix3& a, const Matrix3& b) {
    Matrix3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.set(i, j, a.at(i, j) - b.at(i, j));
    return out;
}

Vector3 Matrix3::apply(const Vector3& x) const {
    Vector3 out;
    for (int i = 0; i < 3; ++i) {
        RadicalComplex s;
        for (int k = 0; k < 3; ++k) s += at(i, k) * x[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(i)] = std::move(s);
    }
    return out;
}

Matrix3 Matrix3::transpose() const {
    Matrix3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.set(i, j, at(j, i));
    return out;
}

RadicalComplex Matrix3::det() const {
    RadicalComplex out;
    out += at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1));
    out -= at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0));
    out += at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    return out;
}

bool Matrix3::is_orthogonal() const {
    return (transpose() * *this).is_identity();
}

bool Matrix3::is_identity() const {
    return *this == identity();
}

std::string Matrix3::str() const {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        out += "[";
        for (int j = 0; j < 3; ++j) {
            if (j > 0) out += ", ";
            out += at(i, j).str();
        }
        out += "]";
        if (i < 2) out += "\n";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix3& m) {
    return os << m.str();
}

} // namespace dunkl
