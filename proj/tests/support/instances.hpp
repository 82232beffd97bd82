#pragma once

#include <random>
#include <string>

#include "pspec/code_model.hpp"

// Random small code instances shared by the unit and acceptance tests.
namespace pspec::testing {

struct Instance {
    CodeSpec spec;
    std::string label;
};

inline PreTransform random_transform(std::mt19937_64& rng, int N, int kind)
{
    if (kind == 1) {
        std::uniform_int_distribution<int> len(2, 7), bit(0, 1);
        std::vector<std::uint8_t> g(static_cast<std::size_t>(len(rng)));
        g[0] = 1;
        for (std::size_t j = 1; j < g.size(); ++j)
            g[j] = static_cast<std::uint8_t>(bit(rng));
        return PreTransform::pac(g);
    }
    if (kind == 2) {
        std::bernoulli_distribution coin(0.3);
        std::vector<BitVector> rows;
        for (int r = 0; r < N; ++r) {
            BitVector row(static_cast<std::size_t>(N));
            row.set(static_cast<std::size_t>(r), true);
            for (int c = r + 1; c < N; ++c)
                row.set(static_cast<std::size_t>(c), coin(rng));
            rows.push_back(row);
        }
        return PreTransform::matrix(rows);
    }
    return PreTransform::identity();
}

/// Instance `index` of a deterministic stream: modes, pattern styles and
/// pre-transforms rotate so every combination appears.
inline Instance random_instance(std::uint64_t seed, int index, int n, int max_info = 20)
{
    std::mt19937_64 rng(seed * 7919 + static_cast<std::uint64_t>(index));
    const int N = 1 << n;
    const auto mode = static_cast<RateMode>(index % 3);
    const bool bit_rev = (index / 3) % 2 == 0;
    const int transform_kind = (index / 6) % 3;

    IndexSet pattern;
    if (mode != RateMode::plain) {
        std::uniform_int_distribution<int> count(1, N / 2);
        const int c = count(rng);
        if (bit_rev)
            pattern = bit_reversal_pattern(n, c, mode);
        else if (mode == RateMode::shortened)
            pattern = random_shortening_pattern(n, c, rng());
        else
            pattern = random_pattern(n, c, rng());
    }
    const auto derived = capability_sets(n, pattern, mode);
    std::vector<int> open;
    for (int i = 0; i < N; ++i)
        if (!std::binary_search(derived.begin(), derived.end(), i))
            open.push_back(i);
    std::shuffle(open.begin(), open.end(), rng);
    const int cap = std::min<int>(max_info, static_cast<int>(open.size()));
    std::uniform_int_distribution<int> kdist(std::min(1, cap), cap);
    const int K = kdist(rng);
    IndexSet frozen(derived);
    frozen.insert(frozen.end(), open.begin() + K, open.end());

    auto transform = random_transform(rng, N, transform_kind);
    const std::string label = "N=" + std::to_string(N) + " mode=" + std::string(to_string(mode)) +
                              (mode == RateMode::plain ? "" : bit_rev ? " bit-reversal" : " random-pattern") +
                              " |P|=" + std::to_string(pattern.size()) + " K=" + std::to_string(K) + " T=" +
                              transform.describe();
    return {CodeSpec::build(n, frozen, mode, pattern, std::move(transform)), label};
}

} // namespace pspec::testing
