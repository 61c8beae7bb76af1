#include "dunkl/group.hpp"

#include <deque>
#include <map>
#include <utility>

namespace dunkl {

RadicalComplex root_norm_squared(const Root& r) {
    return inner(r.v, r.v);
}

Matrix3 reflection_matrix(const Vector3& alpha) {
    RadicalComplex ns = inner(alpha, alpha);
    if (ns.is_zero()) throw std::invalid_argument("reflection through a null vector");
    RadicalComplex scale = RadicalComplex(2) * ns.inverse();
    Matrix3 out = Matrix3::identity();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out.set(i, j, out.at(i, j) - scale * alpha[static_cast<std::size_t>(i)] *
                                             alpha[static_cast<std::size_t>(j)]);
    return out;
}

ParamScalar RootSystemPreset::weight(int root_index) const {
    int cls = positive_roots[static_cast<std::size_t>(root_index)].weight_class;
    return cls == 0 ? ParamScalar::kappa1() : ParamScalar::kappa2();
}

namespace {

Vector3 make_vec(long a, long b, long c) {
    return {RadicalComplex(a), RadicalComplex(b), RadicalComplex(c)};
}

void finish_preset(RootSystemPreset& p) {
    p.reflections.clear();
    for (const Root& r : p.positive_roots) p.reflections.push_back(reflection_matrix(r.v));
}

} // namespace

RootSystemPreset g2_preset() {
    RootSystemPreset p;
    p.name = "g2";
    p.weight_classes = 2;
    p.positive_roots = {
        {make_vec(0, 1, -1), 0},  {make_vec(1, -2, 1), 1}, {make_vec(1, -1, 0), 0},
        {make_vec(1, 1, -2), 1},  {make_vec(1, 0, -1), 0}, {make_vec(2, -1, -1), 1},
    };
    p.simple = {0, 1};
    finish_preset(p);
    return p;
}

RootSystemPreset a2_preset() {
    RootSystemPreset p;
    p.name = "a2";
    p.weight_classes = 1;
    p.positive_roots = {
        {make_vec(1, -1, 0), 0},
        {make_vec(0, 1, -1), 0},
        {make_vec(1, 0, -1), 0},
    };
    p.simple = {0, 1};
    finish_preset(p);
    return p;
}

RootSystemPreset preset_by_name(std::string_view name) {
    if (name == "g2") return g2_preset();
    if (name == "a2") return a2_preset();
    throw InvalidPreset("unknown preset: " + std::string(name));
}

namespace {

// Index of the positive root equal to v up to sign; -1 when absent.
int match_root(const RootSystemPreset& p, const Vector3& v) {
    for (std::size_t k = 0; k < p.positive_roots.size(); ++k) {
        const Vector3& r = p.positive_roots[k].v;
        bool plus = true, minus = true;
        for (int i = 0; i < 3; ++i) {
            if (r[static_cast<std::size_t>(i)] != v[static_cast<std::size_t>(i)]) plus = false;
            if (r[static_cast<std::size_t>(i)] != -v[static_cast<std::size_t>(i)]) minus = false;
        }
        if (plus || minus) return static_cast<int>(k);
    }
    return -1;
}

int find_orbit(std::vector<int>& parent, int k) {
    while (parent[static_cast<std::size_t>(k)] != k) {
        parent[static_cast<std::size_t>(k)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(k)])];
        k = parent[static_cast<std::size_t>(k)];
    }
    return k;
}

} // namespace

std::vector<int> root_orbits(const RootSystemPreset& p) {
    const std::size_t n = p.positive_roots.size();
    std::vector<int> parent(n);
    for (std::size_t k = 0; k < n; ++k) parent[k] = static_cast<int>(k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector3 image = p.reflections[i].apply(p.positive_roots[j].v);
            int k = match_root(p, image);
            if (k < 0) throw InvalidPreset("reflection image of root " + std::to_string(j + 1) +
                                           " is not a root");
            int a = find_orbit(parent, static_cast<int>(j));
            int b = find_orbit(parent, k);
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
    std::vector<int> label(n, -1);
    std::vector<int> out(n);
    int next = 0;
    for (std::size_t k = 0; k < n; ++k) {
        int r = find_orbit(parent, static_cast<int>(k));
        if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = next++;
        out[k] = label[static_cast<std::size_t>(r)];
    }
    return out;
}

void validate_preset(const RootSystemPreset& p) {
    if (p.positive_roots.empty()) throw InvalidPreset("preset has no roots");
    if (p.reflections.size() != p.positive_roots.size())
        throw InvalidPreset("reflection table size mismatch");
    if (p.simple.size() < 2) throw InvalidPreset("preset needs at least two simple roots");
    for (int s : p.simple)
        if (s < 0 || s >= static_cast<int>(p.positive_roots.size()))
            throw InvalidPreset("simple root index out of range");
    for (std::size_t k = 0; k < p.positive_roots.size(); ++k) {
        const Root& r = p.positive_roots[k];
        RadicalComplex ns = root_norm_squared(r);
        if (ns.is_zero()) throw InvalidPreset("zero root");
        if (!ns.is_rational() || ns.rational_part().sgn() <= 0)
            throw InvalidPreset("root norm is not a positive rational");
        if (!sqrt_rational(ns.rational_part()))
            throw InvalidPreset("root length is outside the scalar field");
        if (r.weight_class < 0 || r.weight_class >= p.weight_classes)
            throw InvalidPreset("weight class out of range");
        const Matrix3& m = p.reflections[k];
        if (m != reflection_matrix(r.v)) throw InvalidPreset("stale reflection table");
        if (!m.is_orthogonal()) throw InvalidPreset("reflection is not orthogonal");
        if (m * m != Matrix3::identity()) throw InvalidPreset("reflection is not involutive");
        if (m.det() != RadicalComplex(-1)) throw InvalidPreset("reflection determinant is not -1");
    }
    // The weight function must be constant on orbits of the reflection action.
    std::vector<int> orbits = root_orbits(p);
    for (std::size_t i = 0; i < p.positive_roots.size(); ++i)
        for (std::size_t j = 0; j < p.positive_roots.size(); ++j)
            if (orbits[i] == orbits[j] &&
                p.positive_roots[i].weight_class != p.positive_roots[j].weight_class)
                throw InvalidPreset("weights are not constant on root orbits");
}

std::vector<GroupElement> generate_group(const std::vector<Matrix3>& generators,
                                         std::size_t budget) {
    std::vector<GroupElement> out;
    std::map<Matrix3, std::size_t> seen;
    out.push_back({Matrix3::identity(), {}});
    seen.emplace(out[0].matrix, 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t g = 0; g < generators.size(); ++g) {
            Matrix3 next = out[cur].matrix * generators[g];
            if (seen.count(next)) continue;
            if (out.size() >= budget)
                throw ClosureBudgetExceeded("group closure exceeded " + std::to_string(budget) +
                                            " elements");
            GroupElement e;
            e.matrix = next;
            e.word = out[cur].word;
            e.word.push_back(static_cast<int>(g));
            seen.emplace(e.matrix, out.size());
            queue.push_back(out.size());
            out.push_back(std::move(e));
        }
    }
    return out;
}

int matrix_order(const Matrix3& m, int cap) {
    Matrix3 acc = m;
    for (int k = 1; k <= cap; ++k) {
        if (acc.is_identity()) return k;
        acc = acc * m;
    }
    throw std::invalid_argument("element order exceeds cap");
}

PinElement pin_identity() {
    return {Matrix3::identity(), CliffordElement(1L), {}};
}

PinElement tilde_lift(const Root& r) {
    RadicalComplex ns = root_norm_squared(r);
    if (!ns.is_rational() || ns.rational_part().sgn() <= 0)
        throw InvalidPreset("root norm is not a positive rational");
    auto len = sqrt_rational(ns.rational_part());
    if (!len) throw InvalidPreset("root length is outside the scalar field");
    CliffordElement spinor;
    for (int i = 0; i < 3; ++i)
        spinor += CliffordElement::generator(i).scaled(r.v[static_cast<std::size_t>(i)]);
    spinor = spinor.scaled(len->inverse());
    return {reflection_matrix(r.v), spinor, {}};
}

PinElement pin_mul(const PinElement& a, const PinElement& b, Signature sig) {
    PinElement out;
    out.matrix = a.matrix * b.matrix;
    out.spinor = a.spinor.mul(b.spinor, sig);
    out.word = a.word;
    out.word.insert(out.word.end(), b.word.begin(), b.word.end());
    return out;
}

bool pin_same(const PinElement& a, const PinElement& b) {
    return a.matrix == b.matrix && a.spinor == b.spinor;
}

std::vector<PinElement> generate_pin(const std::vector<PinElement>& generators, Signature sig,
                                     std::size_t budget) {
    std::vector<PinElement> out;
    std::map<std::pair<Matrix3, CliffordElement>, std::size_t> seen;
    out.push_back(pin_identity());
    seen.emplace(std::make_pair(out[0].matrix, out[0].spinor), 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t g = 0; g < generators.size(); ++g) {
            PinElement next = pin_mul(out[cur], generators[g], sig);
            next.word = out[cur].word;
            next.word.push_back(static_cast<int>(g));
            auto key = std::make_pair(next.matrix, next.spinor);
            if (seen.count(key)) continue;
            if (out.size() >= budget)
                throw ClosureBudgetExceeded("pin closure exceeded " + std::to_string(budget) +
                                            " elements");
            seen.emplace(key, out.size());
            queue.push_back(out.size());
            out.push_back(std::move(next));
        }
    }
    return out;
}

} // namespace dunkl
