#include "pspec/spectrum.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <memory>
#include <mutex>
#include <thread>

#include "pspec/coset_engine.hpp"

namespace pspec {

namespace {

using DegreeMessage = Message<std::uint16_t>;

struct SharedCounters {
    explicit SharedCounters(std::size_t stages) : counts(stages) {}
    std::vector<std::atomic<std::uint64_t>> counts;
};

// Depth-first walk over the prefix tree with per-stage message slots.
//
// The message of a depth-d node at stage i depends only on u_0..u_{k-1} with
// k = floor(i / 2^d) * 2^d, so it is computed when i is a multiple of 2^d and
// reused until the next multiple. Slot k stores the depths 0..D_k recomputed
// at stage k, where D_k is the number of trailing zeros of k (n-1 for k = 0).
// Along the current path every slot k <= i holds values for the current
// prefix. Degree messages are kept for every visited node; polynomial
// messages are filled lazily for nodes that feed a surviving final coset.
class Explorer {
public:
    Explorer(const CodeSpec& spec, int w_end, const EnumerationOptions& options, SharedCounters* shared)
        : spec_(spec), n_(spec.n()), N_(spec.length()), s_(spec.last_stage()), w_end_(w_end),
          options_(options), shared_(shared), degrees_(w_end), poly_(w_end),
          u_(static_cast<std::size_t>(N_)), v_(static_cast<std::size_t>(N_)), acc_(static_cast<std::size_t>(w_end) + 1),
          stage_counts_(static_cast<std::size_t>(s_) + 1, 0)
    {
        slot_depths_.resize(static_cast<std::size_t>(s_) + 1);
        slot_base_.resize(static_cast<std::size_t>(s_) + 1);
        stamp_base_.resize(static_cast<std::size_t>(s_) + 1);
        std::size_t total = 0, stamps = 0;
        for (int k = 0; k <= s_; ++k) {
            const int top = k == 0 ? n_ - 1 : std::min(std::countr_zero(static_cast<unsigned>(k)), n_ - 1);
            slot_depths_[static_cast<std::size_t>(k)] = top;
            slot_base_[static_cast<std::size_t>(k)] = total;
            stamp_base_[static_cast<std::size_t>(k)] = stamps;
            total += (std::size_t{2} << top) - 1;
            stamps += static_cast<std::size_t>(top) + 1;
        }
        degree_slots_.resize(total);
        poly_slots_.resize(total, PolyMessage{WeightPoly(w_end), WeightPoly(w_end)});
        poly_stamps_.assign(stamps, 0);
        node_stamps_.assign(static_cast<std::size_t>(s_) + 1, 0);
        offsets_.resize(static_cast<std::size_t>(N_));

        const auto& statuses = spec.leaf_statuses();
        degree_leaves_.reserve(static_cast<std::size_t>(N_));
        poly_leaves_.reserve(static_cast<std::size_t>(N_));
        for (int c = 0; c < N_; ++c) {
            degree_leaves_.push_back(leaf_message(degrees_, false, statuses[static_cast<std::size_t>(c)]));
            poly_leaves_.push_back(leaf_message(poly_, false, statuses[static_cast<std::size_t>(c)]));
        }
    }

    /// Full walk from the empty prefix. When `frontier` is given, children at
    /// stage `split` that survive are collected there instead of explored.
    void run(int split = -1, std::vector<PrefixEntry>* frontier = nullptr)
    {
        split_ = split;
        frontier_ = frontier;
        explore(0);
    }

    /// Continues the walk below a frontier entry collected at stage `split`.
    void run_below(const PrefixEntry& entry, int split)
    {
        split_ = -1;
        frontier_ = nullptr;
        u_ = BitVector(static_cast<std::size_t>(N_));
        v_ = BitVector(static_cast<std::size_t>(N_));
        for (int k = 0; k <= split; ++k) {
            u_.set(static_cast<std::size_t>(k), entry.u_bits.get(static_cast<std::size_t>(k)));
            v_.set(static_cast<std::size_t>(k), entry.v_bits.get(static_cast<std::size_t>(k)));
        }
        for (int k = 0; k <= split; ++k) {
            update_degrees(k);
            node_stamps_[static_cast<std::size_t>(k)] = ++clock_;
        }
        explore(split + 1);
    }

    WeightPoly accumulated() const
    {
        std::vector<Monomial> terms;
        for (std::size_t w = 0; w < acc_.size(); ++w)
            if (acc_[w] != 0)
                terms.push_back({static_cast<int>(w), acc_[w]});
        return WeightPoly::from_terms(std::move(terms), w_end_);
    }
    const std::vector<std::uint64_t>& stage_counts() const { return stage_counts_; }
    std::uint64_t pruned() const { return pruned_; }
    std::uint64_t survivors() const { return survivors_; }

private:
    DegreeMessage* degree_layer(int k, int d)
    {
        return degree_slots_.data() + slot_base_[static_cast<std::size_t>(k)] + ((std::size_t{1} << d) - 1);
    }
    PolyMessage* poly_layer(int k, int d)
    {
        return poly_slots_.data() + slot_base_[static_cast<std::size_t>(k)] + ((std::size_t{1} << d) - 1);
    }
    std::uint64_t& poly_stamp(int k, int d)
    {
        return poly_stamps_[stamp_base_[static_cast<std::size_t>(k)] + static_cast<std::size_t>(d)];
    }
    static int child_slot(int k, int d) { return (k >> (d + 1)) << (d + 1); }

    // offsets_[r] = node input bit of residue r contributed by u[start, start + 2^d).
    void block_offsets(int start, int d)
    {
        const std::size_t len = std::size_t{1} << d;
        for (std::size_t q = 0; q < len; ++q)
            offsets_[q] = u_.get(static_cast<std::size_t>(start) + q);
        for (std::size_t h = 1; h < len; h <<= 1)
            for (std::size_t j = 0; j < len; ++j)
                if (!(j & h))
                    offsets_[j] ^= offsets_[j | h];
    }

    void update_degrees(int i)
    {
        for (int d = slot_depths_[static_cast<std::size_t>(i)]; d >= 0; --d) {
            const int t = i >> d;
            const DegreeMessage* child =
                d + 1 == n_ ? degree_leaves_.data() : degree_layer(child_slot(i, d), d + 1);
            DegreeMessage* out = degree_layer(i, d);
            const int width = 1 << d;
            if (t & 1) {
                block_offsets(i - width, d);
                for (int r = 0; r < width; ++r)
                    out[r] = var_message(degrees_, child[r], child[r + width], offsets_[static_cast<std::size_t>(r)] != 0);
            } else {
                for (int r = 0; r < width; ++r)
                    out[r] = check_message(degrees_, child[r], child[r + width]);
            }
        }
    }

    const PolyMessage* ensure_poly(int k, int d)
    {
        PolyMessage* out = poly_layer(k, d);
        std::uint64_t& stamp = poly_stamp(k, d);
        if (stamp == node_stamps_[static_cast<std::size_t>(k)])
            return out;
        const PolyMessage* child = d + 1 == n_ ? poly_leaves_.data() : ensure_poly(child_slot(k, d), d + 1);
        const int t = k >> d;
        const int width = 1 << d;
        if (t & 1) {
            block_offsets(k - width, d);
            for (int r = 0; r < width; ++r)
                out[r] = var_message(poly_, child[r], child[r + width], offsets_[static_cast<std::size_t>(r)] != 0);
        } else {
            for (int r = 0; r < width; ++r)
                out[r] = check_message(poly_, child[r], child[r + width]);
        }
        stamp = node_stamps_[static_cast<std::size_t>(k)];
        return out;
    }

    void count_stage(int i)
    {
        ++stage_counts_[static_cast<std::size_t>(i)];
        if (options_.max_list_size == 0)
            return;
        const auto total = shared_->counts[static_cast<std::size_t>(i)].fetch_add(1, std::memory_order_relaxed) + 1;
        if (total > options_.max_list_size)
            throw ListCapExceeded("list size at stage " + std::to_string(i) + " exceeds the cap of " +
                                  std::to_string(options_.max_list_size));
    }

    void explore(int i)
    {
        update_degrees(i);
        node_stamps_[static_cast<std::size_t>(i)] = ++clock_;
        const DegreeMessage root = *degree_layer(i, 0);
        const int choices = spec_.is_frozen(i) ? 1 : 2;
        for (int value = 0; value < choices; ++value) {
            v_.set(static_cast<std::size_t>(i), value == 1);
            const bool ui = u_bit(spec_, v_, i);
            u_.set(static_cast<std::size_t>(i), ui);
            count_stage(i);
            if (options_.prune && root[ui] > w_end_) {
                ++pruned_;
                continue;
            }
            if (i == split_) {
                frontier_->push_back({v_.prefix(static_cast<std::size_t>(i) + 1), u_.prefix(static_cast<std::size_t>(i) + 1)});
            } else if (i == s_) {
                const PolyMessage& msg = ensure_poly(i, 0)[0];
                const auto rwef = div_pow2(msg[ui], rank_correction(spec_, i));
                for (const auto& term : rwef.terms())
                    acc_[static_cast<std::size_t>(term.degree)] += term.count;
                ++survivors_;
            } else {
                explore(i + 1);
            }
        }
        v_.set(static_cast<std::size_t>(i), false);
        u_.set(static_cast<std::size_t>(i), false);
    }

    const CodeSpec& spec_;
    const int n_, N_, s_, w_end_;
    const EnumerationOptions& options_;
    SharedCounters* shared_;
    const DegreeAlgebra degrees_;
    const TruncatedAlgebra poly_;

    std::vector<int> slot_depths_;
    std::vector<std::size_t> slot_base_, stamp_base_;
    std::vector<DegreeMessage> degree_slots_, degree_leaves_;
    std::vector<PolyMessage> poly_slots_, poly_leaves_;
    std::vector<std::uint64_t> poly_stamps_, node_stamps_;
    std::uint64_t clock_ = 0;
    std::vector<std::uint8_t> offsets_;

    BitVector u_, v_;
    std::vector<Count> acc_;   // dense by degree
    std::vector<std::uint64_t> stage_counts_;
    std::uint64_t pruned_ = 0, survivors_ = 0;
    int split_ = -1;
    std::vector<PrefixEntry>* frontier_ = nullptr;
};

// Stage at which the walk is handed to worker threads: the first information
// stage below which at least 8 prefixes per thread can exist.
int split_stage(const CodeSpec& spec, unsigned threads)
{
    const int want = std::bit_width(8u * threads);
    int info = 0;
    for (int i = 0; i < spec.last_stage(); ++i) {
        if (!spec.is_frozen(i) && ++info >= want)
            return i;
    }
    return -1;
}

} // namespace

SpectrumResult enumerate_spectrum(const CodeSpec& spec, int w_end, const EnumerationOptions& options)
{
    if (w_end < 1 || w_end > spec.restricted_length())
        throw std::invalid_argument("w_end must lie in [1, " + std::to_string(spec.restricted_length()) + "], got " +
                                    std::to_string(w_end));
    const auto start = std::chrono::steady_clock::now();
    const int s = spec.last_stage();
    SharedCounters shared(static_cast<std::size_t>(s) + 1);

    SpectrumResult result;
    result.w_end = w_end;
    result.spectrum = WeightPoly(w_end);
    result.stats.stage_counts.assign(static_cast<std::size_t>(s) + 1, 0);

    auto absorb = [&](const Explorer& e) {
        result.spectrum += e.accumulated();
        for (std::size_t k = 0; k < result.stats.stage_counts.size(); ++k)
            result.stats.stage_counts[k] += e.stage_counts()[k];
        result.stats.pruned += e.pruned();
        result.stats.survivors += e.survivors();
    };

    const int split = options.threads > 1 ? split_stage(spec, options.threads) : -1;
    if (split < 0) {
        Explorer explorer(spec, w_end, options, &shared);
        explorer.run();
        absorb(explorer);
    } else {
        std::vector<PrefixEntry> frontier;
        {
            Explorer head(spec, w_end, options, &shared);
            head.run(split, &frontier);
            absorb(head);
        }
        const unsigned workers = std::min<unsigned>(options.threads, static_cast<unsigned>(frontier.size()));
        std::vector<std::unique_ptr<Explorer>> explorers;
        for (unsigned t = 0; t < workers; ++t)
            explorers.push_back(std::make_unique<Explorer>(spec, w_end, options, &shared));
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t e = next++; e < frontier.size(); e = next++)
                        explorers[t]->run_below(frontier[e], split);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next = frontier.size();
                }
            });
        }
        for (auto& th : pool)
            th.join();
        if (failure)
            std::rethrow_exception(failure);
        for (const auto& e : explorers)
            absorb(*e);
    }

    for (auto c : result.stats.stage_counts)
        result.stats.cosets_evaluated += c;
    result.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

MinDistance find_min_distance(const CodeSpec& spec, const EnumerationOptions& options)
{
    if (spec.dimension() == 0)
        throw std::invalid_argument("find_min_distance: every input position is frozen; the code has no nonzero codeword");
    const int limit = spec.restricted_length();
    for (int w_end = std::min(4, limit);; w_end = std::min(2 * w_end, limit)) {
        const auto result = enumerate_spectrum(spec, w_end, options);
        for (const auto& term : result.spectrum.terms())
            if (term.degree > 0)
                return {term.degree, term.count};
        if (w_end == limit)
            throw std::invalid_argument("find_min_distance: the restricted code has no nonzero codeword");
    }
}

} // namespace pspec
