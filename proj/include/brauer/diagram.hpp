#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace brauer {

constexpr int kMaxStrands = 8;

// A Brauer diagram on r strands. Vertices 0..r-1 are the top row and r..2r-1
// the bottom row (labels 1..2r externally). The partner of each vertex is
// packed into a nibble of `code`, so equality and hashing are on one word.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(int r);  // identity

    static Diagram from_partners(int r, const std::array<std::uint8_t, 2 * kMaxStrands>& p);
    static Diagram from_pairs(int r, const std::vector<std::pair<int, int>>& pairs);  // 1-based
    static Diagram from_code(int r, std::uint64_t code);
    static Diagram from_perm(const std::vector<int>& w);  // 0-based images, strand i -> bottom w[i]
    static Diagram s(int r, int i);                      // 1-based generator s_i
    static Diagram e(int r, int i);                      // 1-based generator e_i

    int r() const { return r_; }
    std::uint64_t code() const { return code_; }
    int partner(int v) const { return int((code_ >> (4 * v)) & 0xF); }

    bool operator==(const Diagram& o) const { return r_ == o.r_ && code_ == o.code_; }
    bool operator!=(const Diagram& o) const { return !(*this == o); }

    std::vector<std::pair<int, int>> pairs() const;  // canonical, 1-based
    Diagram star() const;
    Diagram embed(int r_new) const;  // extra vertical strands on the right
    bool is_permutation() const;
    std::vector<int> to_perm() const;

    int rank() const;
    int corank() const { return (r_ - rank()) / 2; }
    int length() const;
    int sign() const;  // sgn of sigma_D

    std::string str() const;

private:
    int r_ = 0;
    std::uint64_t code_ = 0;
};

// a over b: returns the product diagram and the number of closed loops
std::pair<Diagram, int> diagram_mult(const Diagram& a, const Diagram& b);

// side by side: a on the left strands, b on the right
Diagram juxtapose(const Diagram& a, const Diagram& b);

bool canonical_less(const Diagram& a, const Diagram& b);

// All diagrams of B_r in canonical lexicographic order, and the inverse map.
const std::vector<Diagram>& all_diagrams(int r);
int diagram_index(const Diagram& d);

// Walled diagrams for the wall between strands r1 and r1+1.
struct WallInfo {
    bool walled = false;
    int sign = 0;
};
WallInfo walled_filter(int r1, int r2, const Diagram& d);

int perm_sign(const std::vector<int>& w);
std::vector<int> perm_compose(const std::vector<int>& p, const std::vector<int>& q);  // p then q
std::vector<int> perm_inverse(const std::vector<int>& p);
std::vector<std::vector<int>> all_perms(int n);

long double_factorial_odd(int r);  // (2r-1)!!

}  // namespace brauer

template <>
struct std::hash<brauer::Diagram> {
    std::size_t operator()(const brauer::Diagram& d) const noexcept
    {
        std::uint64_t x = d.code() * 0x9E3779B97F4A7C15ull + std::uint64_t(d.r());
        return std::size_t(x ^ (x >> 29));
    }
};
