#include "frobcensus/multipoly.hpp"

#include <sstream>

#include "frobcensus/errors.hpp"

namespace frobcensus {

MultiPoly MultiPoly::constant(int nvars, const mpq_class& c) {
    MultiPoly p(nvars);
    p.add_term(Monomial(static_cast<size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::var(int nvars, int index, unsigned exp) {
    if (index < 0 || index >= nvars) throw invalid_input_error("MultiPoly::var: bad index");
    MultiPoly p(nvars);
    Monomial m(static_cast<size_t>(nvars), 0);
    m[static_cast<size_t>(index)] = exp;
    p.add_term(m, 1);
    return p;
}

void MultiPoly::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(nvars_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            for (size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const mpq_class& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

MultiPoly MultiPoly::operator-() const { return *this * mpq_class(-1); }

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(nvars_, 1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[static_cast<size_t>(var)]));
    return d;
}

bool MultiPoly::integer_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

mpq_class MultiPoly::eval(const std::vector<mpq_class>& values) const {
    if (static_cast<int>(values.size()) != nvars_)
        throw invalid_input_error("MultiPoly::eval: wrong number of values");
    mpq_class acc = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class t = c;
        for (size_t i = 0; i < m.size(); ++i) {
            for (unsigned e = 0; e < m[i]; ++e) t *= values[i];
        }
        acc += t;
    }
    return acc;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        out << mpq_class(abs(c)).get_str();
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            out << "*" << names[i];
            if (m[i] > 1) out << "^" << m[i];
        }
    }
    return out.str();
}

} // namespace frobcensus
