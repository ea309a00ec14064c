#include "mfh/braidword/free_word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace mfh {

void FreeWord::push(int index, long long exponent) {
    if (exponent == 0) return;
    if (index < 1) throw std::invalid_argument("generator index must be positive");
    if (!runs_.empty() && runs_.back().first == index) {
        runs_.back().second += exponent;
        if (runs_.back().second == 0) runs_.pop_back();
    } else {
        runs_.emplace_back(index, exponent);
    }
}

FreeWord::FreeWord(const std::vector<Letter>& letters) {
    for (const auto& [i, e] : letters) push(i, e);
}

FreeWord FreeWord::generator(int index, long long exponent) {
    FreeWord w;
    w.push(index, exponent);
    return w;
}

FreeWord FreeWord::from_signed(const std::vector<int>& letters) {
    FreeWord w;
    for (int l : letters) {
        if (l == 0) throw std::invalid_argument("zero letter in signed word");
        w.push(std::abs(l), l > 0 ? 1 : -1);
    }
    return w;
}

long long FreeWord::length() const {
    long long n = 0;
    for (const auto& r : runs_) n += std::llabs(r.second);
    return n;
}

int FreeWord::max_index() const {
    int m = 0;
    for (const auto& r : runs_) m = std::max(m, r.first);
    return m;
}

std::vector<int> FreeWord::to_signed() const {
    std::vector<int> out;
    for (const auto& [i, e] : runs_)
        for (long long k = 0; k < std::llabs(e); ++k) out.push_back(e > 0 ? i : -i);
    return out;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
    FreeWord w = *this;
    w *= rhs;
    return w;
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
    for (const auto& [i, e] : rhs.runs_) push(i, e);
    return *this;
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    w.runs_.reserve(runs_.size());
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) w.runs_.emplace_back(it->first, -it->second);
    return w;
}

FreeWord FreeWord::pow(long long e) const {
    FreeWord base = e < 0 ? inverse() : *this;
    FreeWord out;
    for (long long k = 0; k < std::llabs(e); ++k) out *= base;
    return out;
}

std::string FreeWord::to_string(const std::string& prefix) const {
    if (runs_.empty()) return "1";
    std::string s;
    for (const auto& [i, e] : runs_) {
        if (!s.empty()) s += ' ';
        s += prefix + std::to_string(i);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string FreeWord::to_string(const std::vector<std::string>& names) const {
    if (runs_.empty()) return "1";
    std::string s;
    for (const auto& [i, e] : runs_) {
        if (!s.empty()) s += ' ';
        s += names.at(i - 1);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

FreeWord commutator(const FreeWord& a, const FreeWord& b, CommutatorConvention conv) {
    if (conv == CommutatorConvention::ABAinvBinv) return a * b * a.inverse() * b.inverse();
    return a.inverse() * b.inverse() * a * b;
}

FreeGroupEndo::FreeGroupEndo(std::vector<FreeWord> images) : images_(std::move(images)) {}

FreeGroupEndo FreeGroupEndo::identity(int rank) {
    std::vector<FreeWord> im;
    for (int i = 1; i <= rank; ++i) im.push_back(FreeWord::generator(i));
    return FreeGroupEndo(std::move(im));
}

FreeWord FreeGroupEndo::apply(const FreeWord& w) const {
    FreeWord out;
    for (const auto& [i, e] : w.letters()) {
        if (i > rank()) throw std::out_of_range("generator y" + std::to_string(i) + " outside rank " + std::to_string(rank()));
        const FreeWord& img = images_[i - 1];
        if (e > 0) {
            for (long long k = 0; k < e; ++k) out *= img;
        } else {
            const FreeWord inv = img.inverse();
            for (long long k = 0; k < -e; ++k) out *= inv;
        }
    }
    return out;
}

FreeGroupEndo FreeGroupEndo::compose(const FreeGroupEndo& other) const {
    std::vector<FreeWord> im;
    im.reserve(other.images_.size());
    for (const auto& w : other.images_) im.push_back(apply(w));
    return FreeGroupEndo(std::move(im));
}

bool endo_compare(const FreeGroupEndo& a, const FreeGroupEndo& b) { return a == b; }

FreeGroupEndo conjugation_endo(int rank, const FreeWord& c) {
    std::vector<FreeWord> im;
    for (int i = 1; i <= rank; ++i) im.push_back(c * FreeWord::generator(i) * c.inverse());
    return FreeGroupEndo(std::move(im));
}

bool BasisChange::round_trips() const {
    const int n = to_old.rank();
    return to_old.compose(to_new) == FreeGroupEndo::identity(n) && to_new.compose(to_old) == FreeGroupEndo::identity(n);
}

BasisChange paired_basis(int p) {
    if (p < 1) throw std::invalid_argument("paired_basis needs p >= 1");
    std::vector<FreeWord> old_im(2 * p), new_im(2 * p);
    FreeWord prefix;
    for (int r = 1; r <= p; ++r) {
        prefix *= FreeWord::generator(2 * r - 1) * FreeWord::generator(2 * r);
        old_im[r - 1] = prefix;
        old_im[p + r - 1] = FreeWord::generator(2 * r - 1);
    }
    // y_{2r-1} = v_r, y_{2r} = v_r^-1 u_{r-1}^-1 u_r
    for (int r = 1; r <= p; ++r) {
        const FreeWord v = FreeWord::generator(p + r);
        FreeWord y_even = v.inverse();
        if (r > 1) y_even *= FreeWord::generator(r - 1, -1);
        y_even *= FreeWord::generator(r);
        new_im[2 * r - 2] = v;
        new_im[2 * r - 1] = y_even;
    }
    return {FreeGroupEndo(std::move(old_im)), FreeGroupEndo(std::move(new_im))};
}

BasisChange prefix_basis(int p) {
    if (p < 1) throw std::invalid_argument("prefix_basis needs p >= 1");
    std::vector<FreeWord> old_im(2 * p), new_im(2 * p);
    FreeWord prefix;
    for (int r = 1; r <= p; ++r) {
        prefix *= FreeWord::generator(r);
        old_im[r - 1] = prefix;
        old_im[p + r - 1] = FreeWord::generator(p + r);
        // y_r = u_{r-1}^-1 u_r, y_{p+r} = v_r
        FreeWord y = r > 1 ? FreeWord::generator(r - 1, -1) : FreeWord();
        new_im[r - 1] = y * FreeWord::generator(r);
        new_im[p + r - 1] = FreeWord::generator(p + r);
    }
    return {FreeGroupEndo(std::move(old_im)), FreeGroupEndo(std::move(new_im))};
}

}  // namespace mfh
