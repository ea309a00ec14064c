#include "mfh/foxcalc/laurent.hpp"

#include <stdexcept>

namespace mfh {

void LaurentPoly::adopt(std::size_t nvars) {
    if (nvars_ == nvars) return;
    if (nvars_ != 0) throw std::invalid_argument("Laurent polynomials over different variable counts");
    nvars_ = nvars;
    Terms t;
    for (auto& [e, c] : terms_) t.emplace(Exponents(nvars, 0), c);
    terms_ = std::move(t);
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const BigInt& c) {
    LaurentPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, const BigInt& c) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i, long long e) {
    if (i >= nvars) throw std::out_of_range("variable index");
    Exponents x(nvars, 0);
    x[i] = e;
    return monomial(x);
}

void LaurentPoly::add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    if (e.size() != nvars_) {
        if (nvars_ == 0 && terms_.empty()) nvars_ = e.size();
        else adopt(e.size());
    }
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.nvars_ != nvars_) {
        if (rhs.nvars_ == 0) {
            LaurentPoly r = rhs;
            r.adopt(nvars_);
            return *this += r;
        }
        adopt(rhs.nvars_);
    }
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    out += rhs;
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly a = *this, b = rhs;
    if (a.nvars_ != b.nvars_) {
        if (a.nvars_ == 0) a.adopt(b.nvars_);
        else b.adopt(a.nvars_);
    }
    LaurentPoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

BigInt LaurentPoly::augmentation() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
    if (nvars_ == rhs.nvars_) return terms_ == rhs.terms_;
    return (*this - rhs).is_zero();
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += k < names.size() ? names[k] : "x" + std::to_string(k + 1);
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        BigInt a = abs(c);
        std::string term;
        if (mono.empty()) term = a.get_str();
        else term = (a == 1 ? "" : a.get_str() + "*") + mono;
        if (s.empty()) s = (c < 0 ? "-" : "") + term;
        else s += (c < 0 ? " - " : " + ") + term;
    }
    return s;
}

}  // namespace mfh
