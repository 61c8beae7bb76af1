#include "dunkl/catalogue.hpp"

#include <stdexcept>

namespace dunkl {

namespace {

RadicalComplex neg_i_over_sqrt3() {
    // -i/sqrt3 = -(i sqrt3)/3
    return RadicalComplex::unit(6, Rational(-1, 3));
}

RadicalComplex neg_i_sqrt_two_thirds() {
    // -i sqrt(2/3) = -(i sqrt6)/3
    return RadicalComplex::unit(7, Rational(-1, 3));
}

} // namespace

Catalogue::Catalogue(RootSystemPreset preset, Signature sig)
    : preset_(std::move(preset)), sig_(sig) {
    validate_preset(preset_);
}

OpPtr Catalogue::named(const std::string& key, bool memoize,
                       const std::function<OpPtr()>& build) const {
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    OpPtr op = build();
    if (memoize) enable_memo(op);
    memo_.emplace(key, op);
    return op;
}

void Catalogue::require_root(int k, std::string_view name) const {
    if (k < 0 || k >= static_cast<int>(preset_.positive_roots.size()))
        throw ScopeMismatch(std::string(name) + " is outside the " + preset_.name + " preset");
}

OpPtr Catalogue::root_term(int k) const {
    require_root(k, "root term " + std::to_string(k + 1));
    return named("rootterm" + std::to_string(k), false, [&] {
        return op_root_term(preset_.positive_roots[static_cast<std::size_t>(k)]);
    });
}

OpPtr Catalogue::reflection(int k) const {
    require_root(k, "sig" + std::to_string(k + 1));
    return named("sig" + std::to_string(k), true, [&] {
        return op_group_action(preset_.reflections[static_cast<std::size_t>(k)]);
    });
}

OpPtr Catalogue::tilde(int k) const {
    require_root(k, "tsig" + std::to_string(k + 1));
    return named("tsig" + std::to_string(k), true, [&] {
        PinElement lift = tilde_lift(preset_.positive_roots[static_cast<std::size_t>(k)]);
        return op_compose({op_clifford(lift.spinor), op_group_action(lift.matrix)});
    });
}

OpPtr Catalogue::dunkl(int i) const {
    if (i < 0 || i > 2) throw std::out_of_range("derivative index");
    return named("D" + std::to_string(i + 1), true, [&] {
        std::vector<OpPtr> terms{op_partial(i)};
        for (std::size_t k = 0; k < preset_.positive_roots.size(); ++k) {
            const Root& r = preset_.positive_roots[k];
            ParamScalar coeff =
                preset_.weight(static_cast<int>(k)) * ParamScalar(r.v[static_cast<std::size_t>(i)]);
            terms.push_back(op_scale(coeff, root_term(static_cast<int>(k))));
        }
        return op_sum(std::move(terms));
    });
}

OpPtr Catalogue::dirac() const {
    return named("D", true, [&] {
        std::vector<OpPtr> terms;
        for (int i = 0; i < 3; ++i)
            terms.push_back(op_compose({op_clifford(CliffordElement::generator(i)), dunkl(i)}));
        return op_sum(std::move(terms));
    });
}

OpPtr Catalogue::dual_vector() const {
    return named("X", true, [&] {
        std::vector<OpPtr> terms;
        for (int i = 0; i < 3; ++i)
            terms.push_back(op_compose({op_clifford(CliffordElement::generator(i)), op_mult_x(i)}));
        return op_sum(std::move(terms));
    });
}

OpPtr Catalogue::euler() const {
    return named("euler", true, [&] {
        std::vector<OpPtr> terms;
        for (int i = 0; i < 3; ++i) terms.push_back(op_compose({op_mult_x(i), op_partial(i)}));
        return op_sum(std::move(terms));
    });
}

OpPtr Catalogue::angular(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i > 2 || j > 2) throw std::out_of_range("angular indices");
    if (i > j) return op_neg(angular(j, i));
    return named("L" + std::to_string(i + 1) + std::to_string(j + 1), true, [&] {
        return op_sub(op_compose({op_mult_x(i), dunkl(j)}), op_compose({op_mult_x(j), dunkl(i)}));
    });
}

OpPtr Catalogue::one_index(int l) const {
    if (l < 0 || l > 2) throw std::out_of_range("one-index label");
    return named("O" + std::to_string(l + 1), true, [&] {
        std::vector<OpPtr> terms;
        for (const auto& [k, coeff] : one_index_terms(l))
            terms.push_back(op_scale(coeff, tilde(k)));
        return op_sum(std::move(terms));
    });
}

std::vector<std::pair<int, ParamScalar>> Catalogue::one_index_terms(int l) const {
    if (l < 0 || l > 2) throw std::out_of_range("one-index label");
    std::vector<std::pair<int, ParamScalar>> out;
    for (std::size_t k = 0; k < preset_.positive_roots.size(); ++k) {
        const Root& r = preset_.positive_roots[k];
        RadicalComplex coord = r.v[static_cast<std::size_t>(l)];
        if (coord.is_zero()) continue;
        // Unit-root coordinate alpha_l / |alpha|, signed by the generator square.
        RadicalComplex norm = *sqrt_rational(root_norm_squared(r).coord(0));
        RadicalComplex c = coord * norm.inverse();
        if (sig_.epsilon < 0) c = -c;
        out.emplace_back(static_cast<int>(k), preset_.weight(static_cast<int>(k)).scaled(c));
    }
    return out;
}

OpPtr Catalogue::one_index_bracket() const {
    return named("E", true, [&] { return op_comm(one_index(0), one_index(1)); });
}

OpPtr Catalogue::two_index(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i > 2 || j > 2) throw std::out_of_range("two-index labels");
    if (i > j) return op_neg(two_index(j, i));
    return named("O" + std::to_string(i + 1) + std::to_string(j + 1), true, [&] {
        Blade bij = static_cast<Blade>((1u << i) | (1u << j));
        ParamScalar half_eps(Rational(sig_.epsilon, 2));
        return op_sum({
            angular(i, j),
            op_scale(half_eps, op_clifford(CliffordElement::blade(bij))),
            op_compose({one_index(i), op_clifford(CliffordElement::generator(j))}),
            op_neg(op_compose({one_index(j), op_clifford(CliffordElement::generator(i))})),
        });
    });
}

OpPtr Catalogue::three_index() const {
    return named("O123", true, [&] {
        CliffordElement e12 = CliffordElement::blade(3);
        CliffordElement e13 = CliffordElement::blade(5);
        CliffordElement e23 = CliffordElement::blade(6);
        CliffordElement e123 = CliffordElement::blade(7);
        return op_sum({
            op_scale(ParamScalar(Rational(sig_.epsilon)), op_clifford(e123)),
            op_compose({one_index(0), op_clifford(e23)}),
            op_neg(op_compose({one_index(1), op_clifford(e13)})),
            op_compose({one_index(2), op_clifford(e12)}),
            op_compose({angular(0, 1), op_clifford(CliffordElement::generator(2))}),
            op_neg(op_compose({angular(0, 2), op_clifford(CliffordElement::generator(1))})),
            op_compose({angular(1, 2), op_clifford(CliffordElement::generator(0))}),
        });
    });
}

OpPtr Catalogue::o_zero() const {
    return named("O0", true, [&] {
        OpPtr combo = op_sum({two_index(0, 1), two_index(1, 2), op_neg(two_index(0, 2))});
        return op_scale(ParamScalar(neg_i_over_sqrt3()), combo);
    });
}

OpPtr Catalogue::o_plus() const {
    return named("Op", true, [&] {
        ParamScalar w(RadicalComplex::omega());
        ParamScalar wbar(RadicalComplex::omega().conj());
        OpPtr combo = op_sum({two_index(0, 1), op_scale(w, two_index(1, 2)),
                              op_neg(op_scale(wbar, two_index(0, 2)))});
        return op_scale(ParamScalar(neg_i_sqrt_two_thirds()), combo);
    });
}

OpPtr Catalogue::o_minus() const {
    return named("Om", true, [&] {
        ParamScalar w(RadicalComplex::omega());
        ParamScalar wbar(RadicalComplex::omega().conj());
        OpPtr combo = op_sum({two_index(0, 1), op_scale(wbar, two_index(1, 2)),
                              op_neg(op_scale(w, two_index(0, 2)))});
        return op_scale(ParamScalar(neg_i_sqrt_two_thirds()), combo);
    });
}

OpPtr Catalogue::ladder_plus() const {
    if (preset_.name != "g2")
        throw ScopeMismatch("Kp is defined for the g2 preset, not " + preset_.name);
    return named("Kp", true, [&] {
        return op_scale(ParamScalar(Rational(1, 2)), op_acomm(o_zero(), o_plus()));
    });
}

OpPtr Catalogue::ladder_minus() const {
    if (preset_.name != "g2")
        throw ScopeMismatch("Km is defined for the g2 preset, not " + preset_.name);
    return named("Km", true, [&] {
        return op_scale(ParamScalar(Rational(1, 2)), op_acomm(o_zero(), o_minus()));
    });
}

OpPtr Catalogue::dunkl2_variant() const {
    require_root(3, "the fourth-root variant");
    return named("D2variant", true, [&] {
        std::vector<OpPtr> terms{op_partial(1)};
        for (std::size_t k = 0; k < preset_.positive_roots.size(); ++k) {
            const Root& r = preset_.positive_roots[k];
            ParamScalar coeff =
                preset_.weight(static_cast<int>(k)) * ParamScalar(r.v[1]);
            if (k == 2) {
                terms.push_back(op_scale(-coeff, root_term(static_cast<int>(k))));
            } else if (k == 3) {
                Vector3 shifted = {RadicalComplex(1), RadicalComplex(1), RadicalComplex(-1)};
                terms.push_back(op_scale(
                    coeff, op_diff_quotient(preset_.reflections[k], shifted)));
            } else {
                terms.push_back(op_scale(coeff, root_term(static_cast<int>(k))));
            }
        }
        return op_sum(std::move(terms));
    });
}

OpPtr Catalogue::lookup(std::string_view name) const {
    if (name == "D") return dirac();
    if (name == "X") return dual_vector();
    if (name == "E") return one_index_bracket();
    if (name == "O123") return three_index();
    if (name == "O0") return o_zero();
    if (name == "Op") return o_plus();
    if (name == "Om") return o_minus();
    if (name == "Kp") return ladder_plus();
    if (name == "Km") return ladder_minus();
    if (name.size() == 2 && name[0] == 'D' && name[1] >= '1' && name[1] <= '3')
        return dunkl(name[1] - '1');
    if (name.size() == 2 && name[0] == 'O' && name[1] >= '1' && name[1] <= '3')
        return one_index(name[1] - '1');
    if (name.size() == 3 && (name[0] == 'L' || name[0] == 'O') && name[1] >= '1' &&
        name[1] <= '3' && name[2] >= '1' && name[2] <= '3' && name[1] != name[2]) {
        int i = name[1] - '1', j = name[2] - '1';
        return name[0] == 'L' ? angular(i, j) : two_index(i, j);
    }
    if (name.size() == 4 && name.substr(0, 3) == "sig" && name[3] >= '1' && name[3] <= '6')
        return reflection(name[3] - '1');
    if (name.size() == 5 && name.substr(0, 4) == "tsig" && name[4] >= '1' && name[4] <= '6')
        return tilde(name[4] - '1');
    throw std::invalid_argument("unknown operator name: " + std::string(name));
}

const std::vector<std::string>& Catalogue::operator_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out = {"D1", "D2", "D3", "D",  "X",  "L12", "L13",
                                        "L23", "O12", "O13", "O23", "O1", "O2", "O3",
                                        "O123", "E", "O0", "Op", "Om", "Kp", "Km"};
        for (int k = 1; k <= 6; ++k) out.push_back("sig" + std::to_string(k));
        for (int k = 1; k <= 6; ++k) out.push_back("tsig" + std::to_string(k));
        return out;
    }();
    return names;
}

} // namespace dunkl
