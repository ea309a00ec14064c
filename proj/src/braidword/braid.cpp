#include "mfh/braidword/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mfh {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
    for (int l : letters_)
        if (l == 0 || std::abs(l) >= strands)
            throw std::invalid_argument("braid letter " + std::to_string(l) + " out of range for " +
                                        std::to_string(strands) + " strands");
}

BraidWord BraidWord::sigma(int strands, int i, int exponent) {
    std::vector<int> l(std::abs(exponent), exponent > 0 ? i : -i);
    return BraidWord(strands, std::move(l));
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
    if (strands_ != rhs.strands_) throw std::invalid_argument("braids on different strand counts");
    std::vector<int> l = letters_;
    l.insert(l.end(), rhs.letters_.begin(), rhs.letters_.end());
    return BraidWord(strands_, std::move(l));
}

BraidWord BraidWord::inverse() const {
    std::vector<int> l;
    l.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) l.push_back(-*it);
    return BraidWord(strands_, std::move(l));
}

BraidWord BraidWord::pow(long long e) const {
    BraidWord base = e < 0 ? inverse() : *this;
    BraidWord out(strands_, {});
    for (long long k = 0; k < std::llabs(e); ++k) out = out * base;
    return out;
}

std::vector<int> BraidWord::permutation() const {
    // pos[k] = current position of the strand that started at k
    std::vector<int> at(strands_);
    std::iota(at.begin(), at.end(), 0);  // at[position] = strand
    for (int l : letters_) {
        const int i = std::abs(l) - 1;
        std::swap(at[i], at[i + 1]);
    }
    std::vector<int> result(strands_);
    for (int pos = 0; pos < strands_; ++pos) result[at[pos]] = pos;
    return result;
}

bool BraidWord::is_pure() const {
    auto perm = permutation();
    for (int k = 0; k < strands_; ++k)
        if (perm[k] != k) return false;
    return true;
}

std::string BraidWord::to_string() const {
    std::string s = std::to_string(strands_) + ":";
    for (int l : letters_) s += " " + std::to_string(l);
    return s;
}

BraidWord BraidWord::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("braid text needs 'strands:' header");
    int strands = std::stoi(text.substr(0, colon));
    std::istringstream in(text.substr(colon + 1));
    std::vector<int> l;
    int x;
    while (in >> x) l.push_back(x);
    if (!in.eof()) throw std::invalid_argument("malformed braid letters: " + text);
    return BraidWord(strands, std::move(l));
}

std::string ArtinConvention::to_string() const {
    std::string s = mirror ? "mirror crossing" : "standard crossing";
    s += leftmost_first ? ", leftmost letter acts first" : ", rightmost letter acts first";
    s += commutator == CommutatorConvention::ABAinvBinv ? ", [a,b]=aba^-1b^-1" : ", [a,b]=a^-1b^-1ab";
    return s;
}

namespace {

FreeGroupEndo letter_endo(int strands, int letter, bool mirror) {
    FreeGroupEndo e = FreeGroupEndo::identity(strands);
    std::vector<FreeWord> im = e.images();
    const int i = std::abs(letter);
    const FreeWord yi = FreeWord::generator(i), yj = FreeWord::generator(i + 1);
    const bool positive = (letter > 0) != mirror;
    if (positive) {
        im[i - 1] = yi * yj * yi.inverse();
        im[i] = yi;
    } else {
        im[i - 1] = yj;
        im[i] = yj.inverse() * yi * yj;
    }
    return FreeGroupEndo(std::move(im));
}

}  // namespace

FreeGroupEndo artin_automorphism(const BraidWord& b, const ArtinConvention& conv) {
    const int n = b.strands();
    FreeGroupEndo e = FreeGroupEndo::identity(n);
    const auto& l = b.letters();
    // Homomorphic order: action = rho(l_1) o ... o rho(l_k); accumulate e <- e o rho(l).
    if (!conv.leftmost_first) {
        for (int x : l) e = e.compose(letter_endo(n, x, conv.mirror));
    } else {
        for (auto it = l.rbegin(); it != l.rend(); ++it) e = e.compose(letter_endo(n, *it, conv.mirror));
    }
    return e;
}

FreeWord artin_action(const BraidWord& b, const FreeWord& w, const ArtinConvention& conv) {
    if (w.max_index() > b.strands())
        throw std::out_of_range("word uses generator beyond " + std::to_string(b.strands()) + " strands");
    return artin_automorphism(b, conv).apply(w);
}

BraidWord pure_braid_generator(int strands, int i, int j) {
    if (i < 1 || i >= j || j > strands)
        throw std::invalid_argument("pure braid generator needs 1 <= i < j <= strands");
    std::vector<int> l;
    for (int k = j - 1; k > i; --k) l.push_back(k);
    l.push_back(i);
    l.push_back(i);
    for (int k = i + 1; k < j; ++k) l.push_back(-k);
    return BraidWord(strands, std::move(l));
}

BraidWord full_twist(int strands) {
    std::vector<int> l;
    for (int r = 0; r < strands; ++r)
        for (int i = 1; i < strands; ++i) l.push_back(i);
    return BraidWord(strands, std::move(l));
}

MonodromyBraids monodromy_braids(int p) {
    if (p < 2) throw std::invalid_argument("monodromy_braids needs p >= 2");
    const int s = 2 * p;
    MonodromyBraids b;
    b.p = p;
    std::vector<int> l;
    for (int i = p - 1; i >= 1; --i) l.push_back(i);
    b.rho0 = BraidWord(s, l);
    l.clear();
    for (int k = 1; k <= p - 1; ++k)
        for (int i = k + 1; i <= 2 * p - k - 1; i += 2) l.push_back(i);
    b.tau = BraidWord(s, l);
    l.clear();
    for (int i = 1; i <= 2 * p - 1; i += 2) l.push_back(i);
    b.rho1 = b.tau.inverse() * BraidWord(s, l) * b.tau;
    b.Z1 = b.rho0.pow(p);
    b.Z2 = b.rho1 * b.rho0.pow(p) * b.rho1.inverse();
    for (int r = 1; r <= p; ++r) b.A12.push_back(b.rho0.pow(r - p) * b.rho1.pow(2) * b.rho0.pow(p - r));
    b.zfrak = b.tau * b.Z1 * b.tau.inverse();
    b.afrak = b.tau * b.A12[p - 1] * b.tau.inverse();
    for (int j = 1; j <= p - 1; ++j) b.afrak_j.push_back(b.tau * b.A12[j - 1] * b.tau.inverse());
    return b;
}

BraidWord odd_pair_product(int p) {
    BraidWord out(2 * p, {});
    for (int i = 1; i <= 2 * p - 1; i += 2) out = out * pure_braid_generator(2 * p, i, i + 1);
    return out;
}

BraidWord odd_full_twist(int p) {
    BraidWord out(2 * p, {});
    for (int j = 2; j <= p; ++j)
        for (int i = 1; i <= 2 * j - 3; i += 2) out = out * pure_braid_generator(2 * p, i, 2 * j - 1);
    return out;
}

namespace {

// Generator indices in the paired basis: u_r -> r, v_r -> p + r.
FreeWord u_word(int r) { return r == 0 ? FreeWord() : FreeWord::generator(r); }
FreeWord v_word(int p, int r) { return FreeWord::generator(p + r); }

}  // namespace

FreeGroupEndo zfrak_formula(int p, CommutatorConvention conv) {
    FreeWord V;
    for (int r = 1; r <= p; ++r) V *= v_word(p, r);
    std::vector<FreeWord> im(2 * p);
    for (int r = 1; r <= p; ++r) {
        FreeWord tail, head;
        for (int k = r + 1; k <= p; ++k) tail *= v_word(p, k);
        for (int k = 1; k <= r; ++k) head *= v_word(p, k);
        im[r - 1] = u_word(r) * commutator(tail, head, conv);
        im[p + r - 1] = V * v_word(p, r) * V.inverse();
    }
    return FreeGroupEndo(std::move(im));
}

FreeGroupEndo afrak_formula(int p) {
    std::vector<FreeWord> im(2 * p);
    for (int r = 1; r <= p; ++r) {
        im[r - 1] = u_word(r);
        const FreeWord c = u_word(r - 1).inverse() * u_word(r);
        im[p + r - 1] = c * v_word(p, r) * c.inverse();
    }
    return FreeGroupEndo(std::move(im));
}

BraidIdentityReport check_braid_identities(int p, const ArtinConvention& conv) {
    const MonodromyBraids b = monodromy_braids(p);
    const FreeGroupEndo z = artin_automorphism(b.zfrak, conv);
    const FreeGroupEndo a = artin_automorphism(b.afrak, conv);
    BraidIdentityReport rep;
    rep.afrak_combing = endo_compare(a, artin_automorphism(odd_pair_product(p), conv));
    rep.zfrak_combing = endo_compare(z, artin_automorphism(odd_full_twist(p), conv));
    const BasisChange basis = paired_basis(p);
    rep.zfrak_action = endo_compare(basis.in_new(z), zfrak_formula(p, conv.commutator));
    rep.afrak_action = endo_compare(basis.in_new(a), afrak_formula(p));
    return rep;
}

std::vector<ArtinConvention> pin_artin_convention(const std::vector<int>& primes) {
    std::vector<ArtinConvention> hits;
    for (bool mirror : {false, true})
        for (bool left : {false, true})
            for (auto comm : {CommutatorConvention::ABAinvBinv, CommutatorConvention::AinvBinvAB}) {
                ArtinConvention c{mirror, left, comm};
                bool ok = true;
                for (int p : primes) ok = ok && check_braid_identities(p, c).all();
                if (ok) hits.push_back(c);
            }
    return hits;
}

}  // namespace mfh
