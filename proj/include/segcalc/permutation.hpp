#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace segcalc {

/// A permutation of {0, ..., t-1} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    /// Throws PreconditionError unless image is a bijection of {0..t-1}.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(std::size_t t);

    std::size_t size() const { return image_.size(); }
    int operator()(std::size_t i) const { return image_[i]; }
    const std::vector<int>& image() const { return image_; }

    bool is_involution() const;
    bool is_fixed(std::size_t i) const { return image_[i] == static_cast<int>(i); }

    /// 1-based cycle notation without fixed points; "id" for the identity.
    std::string cycles() const;
    /// 1-based one-line notation, e.g. "2,1,3".
    std::string one_line() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

/// All involutions of 𝔖_t in lexicographic one-line order.
std::vector<Permutation> involutions(std::size_t t);

/// Parses 1-based one-line notation "2,1,3".
Permutation parse_one_line(const std::string& text);

}  // namespace segcalc
