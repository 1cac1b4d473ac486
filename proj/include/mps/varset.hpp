#ifndef MPS_VARSET_HPP
#define MPS_VARSET_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

// Number of 64-bit words in a VarSet; configurable at build time
// (cmake -DMPS_VARSET_WORDS=k). Default supports up to 128 variables.
#ifndef MPS_VARSET_WORDS
#define MPS_VARSET_WORDS 2
#endif

namespace mps {

// Fixed-capacity bitmask over the canonical variable universe.
// Bit k set <=> canonical variable k is a member. All operations are
// O(words); values are freely copyable.
class VarSet {
public:
    static constexpr int kWords = MPS_VARSET_WORDS;
    static constexpr int kCapacity = kWords * 64;

    constexpr VarSet() : words_{} {}

    static constexpr VarSet full(int n) {
        VarSet s;
        for (int w = 0; w < kWords; ++w) {
            int lo = w * 64;
            if (n <= lo) break;
            int bits = n - lo >= 64 ? 64 : n - lo;
            s.words_[w] = bits == 64 ? ~std::uint64_t{0}
                                     : ((std::uint64_t{1} << bits) - 1);
        }
        return s;
    }

    static constexpr VarSet single(int k) {
        VarSet s;
        s.add(k);
        return s;
    }

    constexpr bool contains(int k) const {
        return (words_[k >> 6] >> (k & 63)) & 1u;
    }

    constexpr void add(int k) { words_[k >> 6] |= std::uint64_t{1} << (k & 63); }
    constexpr void remove(int k) { words_[k >> 6] &= ~(std::uint64_t{1} << (k & 63)); }

    constexpr VarSet with(int k) const {
        VarSet s = *this;
        s.add(k);
        return s;
    }

    constexpr VarSet without(int k) const {
        VarSet s = *this;
        s.remove(k);
        return s;
    }

    constexpr bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    constexpr int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    // Highest set bit, -1 for the empty set.
    constexpr int max_bit() const {
        for (int w = kWords - 1; w >= 0; --w)
            if (words_[w]) return w * 64 + 63 - std::countl_zero(words_[w]);
        return -1;
    }

    constexpr bool subset_of(const VarSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    constexpr VarSet operator|(const VarSet& o) const {
        VarSet s;
        for (int w = 0; w < kWords; ++w) s.words_[w] = words_[w] | o.words_[w];
        return s;
    }

    constexpr VarSet operator&(const VarSet& o) const {
        VarSet s;
        for (int w = 0; w < kWords; ++w) s.words_[w] = words_[w] & o.words_[w];
        return s;
    }

    // Set difference.
    constexpr VarSet operator-(const VarSet& o) const {
        VarSet s;
        for (int w = 0; w < kWords; ++w) s.words_[w] = words_[w] & ~o.words_[w];
        return s;
    }

    constexpr bool operator==(const VarSet& o) const { return words_ == o.words_; }
    constexpr bool operator!=(const VarSet& o) const { return words_ != o.words_; }

    // Numeric order of the bitmask (word 0 least significant); the
    // deterministic tie-break used by the store's canonical entry order.
    constexpr int compare_bits(const VarSet& o) const {
        for (int w = kWords - 1; w >= 0; --w) {
            if (words_[w] != o.words_[w]) return words_[w] < o.words_[w] ? -1 : 1;
        }
        return 0;
    }

    // Visits members in ascending canonical order.
    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                f(w * 64 + std::countr_zero(word));
                word &= word - 1;
            }
        }
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h);
    }

private:
    std::array<std::uint64_t, kWords> words_;
};

struct VarSetHash {
    std::size_t operator()(const VarSet& s) const { return s.hash(); }
};

} // namespace mps

#endif // MPS_VARSET_HPP
