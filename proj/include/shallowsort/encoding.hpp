// In-array run-length encoding for the jump-back engine.
//
// A long run (length > 3*lambda, lambda = ceil(log2 n) + 1) stores
// lambda bits in its last lambda+1 cells: bits b_1..b_{lambda-1} are the
// run length (b_1 most significant), b_lambda tells the scheme apart
// (0 pivot, 1 marker).  With F and L the first and last lambda cells and p
// the cell just before L, a bit reads 1 iff L[i] >= p under either scheme.
//
// Pivot scheme (usable when F's last element is strictly below p): a zero
// bit swaps L[i] with F[i].  Marker scheme (the middle is one plateau equal
// to p): L is copied into the first lambda cells of the middle, then L is
// overwritten with two globally chosen distinct marker values and p with the
// larger one.  Both encode, decode and reverse in O(lambda).
#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "shallowsort/metrics.hpp"
#include "shallowsort/runs.hpp"

namespace shallowsort {

struct Lambda {
    std::uint64_t lambda = 0;
    std::uint64_t short_threshold = 0;  // 3 * lambda

    static Lambda for_size(std::uint64_t n) {
        std::uint64_t ceil_log2 = 0;
        while ((std::uint64_t{1} << ceil_log2) < n) ++ceil_log2;
        Lambda l;
        l.lambda = ceil_log2 + 1;
        l.short_threshold = 3 * l.lambda;
        return l;
    }
};

struct DecodedTag {
    std::uint64_t len = 0;
    bool marker_scheme = false;
};

template <class T>
struct MarkerPair {
    T lo, hi;  // lo < hi under the comparator
};

struct EncodingCorruption : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// First two comparator-distinct values in scan order, or nothing when every
// element is equivalent (in which case the array is already sorted).
template <class T, class Cmp, class M>
std::optional<MarkerPair<T>> find_markers(std::span<const T> a, Cmp cmp, M& m) {
    if (a.empty()) return std::nullopt;
    const T& first = a.front();
    for (std::size_t i = 1; i < a.size(); ++i) {
        m.on_comparison();
        if (cmp(a[i], first)) return MarkerPair<T>{a[i], first};
        m.on_comparison();
        if (cmp(first, a[i])) return MarkerPair<T>{first, a[i]};
    }
    return std::nullopt;
}

template <class T, class Cmp, class M>
bool is_pivotable(std::span<const T> a, const RunEntry& run,
                  std::uint64_t lambda, Cmp cmp, M& m) {
    assert(run.len >= 3 * lambda + 1);
    const T& f_last = a[run.start + lambda - 1];
    const T& pivot = a[run.end() - lambda - 1];
    m.on_comparison();
    return cmp(f_last, pivot);
}

namespace detail {

// bit i (1-based) of the tag for a run of length len under `marker` scheme
inline bool tag_bit(std::uint64_t len, bool marker, std::uint64_t lambda,
                    std::uint64_t i) {
    if (i == lambda) return marker;
    return (len >> (lambda - 1 - i)) & 1;  // b_1 is the most significant
}

// Raw bit writers, factored out so the exact cell transformations can be
// exercised with arbitrary bit vectors.
template <class T, class M>
void encode_bits_pivot(std::span<T> a, const RunEntry& run,
                       std::uint64_t lambda, std::span<const bool> bits,
                       M& m) {
    assert(bits.size() == lambda);
    const std::size_t f = run.start, l = run.end() - lambda;
    for (std::uint64_t i = 0; i < lambda; ++i) {
        if (!bits[i]) {
            std::swap(a[f + i], a[l + i]);
            m.on_move(2);
        }
    }
}

template <class T, class M>
void encode_bits_marker(std::span<T> a, const RunEntry& run,
                        std::uint64_t lambda, std::span<const bool> bits,
                        const MarkerPair<T>& mk, M& m) {
    assert(bits.size() == lambda);
    const std::size_t l = run.end() - lambda;
    const std::size_t copy = run.start + lambda;  // first lambda cells of M
    for (std::uint64_t i = 0; i < lambda; ++i) {
        a[copy + i] = a[l + i];
        m.on_move();
    }
    for (std::uint64_t i = 0; i < lambda; ++i) {
        a[l + i] = bits[i] ? mk.hi : mk.lo;
        m.on_move();
    }
    a[run.end() - lambda - 1] = mk.hi;  // pivot cell
    m.on_move();
}

template <class T, class Cmp, class M>
std::uint64_t read_bits(std::span<const T> a, std::size_t end_exclusive,
                        std::uint64_t lambda, Cmp cmp, M& m) {
    const std::size_t l = end_exclusive - lambda;
    const T& pivot = a[end_exclusive - lambda - 1];
    std::uint64_t bits = 0;
    for (std::uint64_t i = 0; i < lambda; ++i) {
        m.on_comparison();
        const bool one = !cmp(a[l + i], pivot);  // L[i] >= p
        bits = (bits << 1) | (one ? 1 : 0);
    }
    return bits;  // b_1 in the highest of the lambda low bits
}

}  // namespace detail

// Writes the run's length (and scheme flag) into its last lambda+1 cells.
template <class T, class Cmp, class M>
void encode_run_length(std::span<T> a, const RunEntry& run,
                       std::uint64_t lambda, const MarkerPair<T>& markers,
                       Cmp cmp, M& m) {
    assert(run.len >= 3 * lambda + 1 && run.end() <= a.size());
    assert(run.len < (std::uint64_t{1} << (lambda - 1)));
    const bool marker = !is_pivotable(std::span<const T>(a), run, lambda, cmp, m);
    std::array<bool, 72> bits{};  // lambda <= 65 for any 64-bit n
    assert(lambda <= bits.size());
    for (std::uint64_t i = 1; i <= lambda; ++i)
        bits[i - 1] = detail::tag_bit(run.len, marker, lambda, i);
    const std::span<const bool> view(bits.data(), lambda);
    if (marker)
        detail::encode_bits_marker(a, run, lambda, view, markers, m);
    else
        detail::encode_bits_pivot(a, run, lambda, view, m);
    m.on_encode();
}

// Reads the tag whose cells end at end_exclusive.  The decoded start must
// stay inside [base, end_exclusive) and the length must be a legal long-run
// length, otherwise the tag cells were not an encoding.
template <class T, class Cmp, class M>
DecodedTag decode_run_length(std::span<const T> a, std::size_t end_exclusive,
                             std::size_t base, std::uint64_t lambda, Cmp cmp,
                             M& m) {
    assert(end_exclusive >= base + lambda + 1 && end_exclusive <= a.size());
    const std::uint64_t bits =
        detail::read_bits(a, end_exclusive, lambda, cmp, m);
    DecodedTag tag;
    tag.marker_scheme = bits & 1;
    tag.len = bits >> 1;
    m.on_decode();
    if (tag.len < 3 * lambda + 1 || tag.len > end_exclusive - base)
        throw EncodingCorruption("decoded run length out of range");
    return tag;
}

// Restores the exact pre-encoding cell contents.
template <class T, class Cmp, class M>
void reverse_encoding(std::span<T> a, std::size_t run_start, std::uint64_t len,
                      bool marker_scheme, std::uint64_t lambda, Cmp, M& m) {
    const RunEntry run{run_start, static_cast<std::size_t>(len)};
    const std::size_t l = run.end() - lambda;
    if (marker_scheme) {
        const std::size_t copy = run_start + lambda;
        for (std::uint64_t i = 0; i < lambda; ++i) {
            a[l + i] = a[copy + i];
            m.on_move();
        }
        // the plateau value survives in F's last cell
        const T plateau = a[run_start + lambda - 1];
        for (std::uint64_t i = 0; i < lambda; ++i) {
            a[copy + i] = plateau;
            m.on_move();
        }
        a[run.end() - lambda - 1] = plateau;
        m.on_move();
    } else {
        for (std::uint64_t i = 1; i <= lambda; ++i) {
            if (!detail::tag_bit(len, false, lambda, i)) {
                std::swap(a[run_start + i - 1], a[l + i - 1]);
                m.on_move(2);
            }
        }
    }
}

}  // namespace shallowsort
