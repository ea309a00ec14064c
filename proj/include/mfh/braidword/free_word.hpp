#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mfh {

/// Freely reduced word in generators 1..n, stored as (index, exponent) runs.
class FreeWord {
public:
    using Letter = std::pair<int, long long>;

    FreeWord() = default;
    /// Reduces the input; zero exponents are dropped.
    explicit FreeWord(const std::vector<Letter>& letters);
    static FreeWord generator(int index, long long exponent = 1);
    /// Signed letter list, e.g. {1, -2, -2} for y1 y2^-2.
    static FreeWord from_signed(const std::vector<int>& letters);

    const std::vector<Letter>& letters() const { return runs_; }
    bool empty() const { return runs_.empty(); }
    long long length() const;
    int max_index() const;
    std::vector<int> to_signed() const;

    FreeWord operator*(const FreeWord& rhs) const;
    FreeWord& operator*=(const FreeWord& rhs);
    FreeWord inverse() const;
    FreeWord pow(long long e) const;

    bool operator==(const FreeWord& rhs) const { return runs_ == rhs.runs_; }
    bool operator!=(const FreeWord& rhs) const { return runs_ != rhs.runs_; }
    bool operator<(const FreeWord& rhs) const { return runs_ < rhs.runs_; }

    /// "y1 y2^-1" style, "1" for the empty word.
    std::string to_string(const std::string& prefix = "y") const;
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void push(int index, long long exponent);
    std::vector<Letter> runs_;
};

enum class CommutatorConvention { ABAinvBinv, AinvBinvAB };

/// [a,b] as aba^-1b^-1 or a^-1b^-1ab.
FreeWord commutator(const FreeWord& a, const FreeWord& b,
                    CommutatorConvention conv = CommutatorConvention::ABAinvBinv);

/// Endomorphism of the free group of the given rank, by generator images.
class FreeGroupEndo {
public:
    FreeGroupEndo() = default;
    explicit FreeGroupEndo(std::vector<FreeWord> images);
    static FreeGroupEndo identity(int rank);

    int rank() const { return static_cast<int>(images_.size()); }
    const std::vector<FreeWord>& images() const { return images_; }
    const FreeWord& image(int index) const { return images_.at(index - 1); }

    /// Throws std::out_of_range if w uses a generator beyond rank().
    FreeWord apply(const FreeWord& w) const;
    /// (*this)∘other: first other, then this.
    FreeGroupEndo compose(const FreeGroupEndo& other) const;

    bool operator==(const FreeGroupEndo& rhs) const { return images_ == rhs.images_; }
    bool operator!=(const FreeGroupEndo& rhs) const { return images_ != rhs.images_; }

private:
    std::vector<FreeWord> images_;
};

/// True iff both endomorphisms have equal rank and identical reduced images.
bool endo_compare(const FreeGroupEndo& a, const FreeGroupEndo& b);

/// Conjugation w -> c w c^-1 on the free group of the given rank.
FreeGroupEndo conjugation_endo(int rank, const FreeWord& c);

/// A second free basis of the same free group. to_old sends new generator i
/// to its expression in the old generators; to_new is the inverse.
struct BasisChange {
    FreeGroupEndo to_old;
    FreeGroupEndo to_new;

    /// The endomorphism e written in new coordinates.
    FreeGroupEndo in_new(const FreeGroupEndo& e) const { return to_new.compose(e.compose(to_old)); }
    bool round_trips() const;
};

/// u_r = y_1...y_{2r}, v_r = y_{2r-1} on F_{2p}; new generator order
/// u_1..u_p, v_1..v_p.
BasisChange paired_basis(int p);
/// u_r = y_1...y_r, v_r = y_{p+r} on F_{2p}; new generator order
/// u_1..u_p, v_1..v_p.
BasisChange prefix_basis(int p);

}  // namespace mfh
