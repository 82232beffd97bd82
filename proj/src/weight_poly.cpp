#include "pspec/weight_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace pspec {

WeightPoly::WeightPoly(int w_cap) : w_cap_(w_cap)
{
    if (w_cap < 0)
        throw std::invalid_argument("WeightPoly: w_cap must be non-negative");
}

WeightPoly WeightPoly::constant(Count c, int w_cap) { return monomial(0, std::move(c), w_cap); }

WeightPoly WeightPoly::monomial(int degree, Count c, int w_cap)
{
    if (degree < 0)
        throw std::invalid_argument("WeightPoly: negative degree");
    if (c < 0)
        throw std::invalid_argument("WeightPoly: negative count");
    WeightPoly p(w_cap);
    if (degree <= w_cap && c != 0)
        p.terms_.push_back({degree, std::move(c)});
    return p;
}

WeightPoly WeightPoly::from_terms(std::vector<Monomial> terms, int w_cap)
{
    WeightPoly p(w_cap);
    std::sort(terms.begin(), terms.end(), [](const Monomial& a, const Monomial& b) { return a.degree < b.degree; });
    for (auto& t : terms) {
        if (t.degree < 0 || t.count < 0)
            throw std::invalid_argument("WeightPoly: negative degree or count");
        if (t.degree > w_cap || t.count == 0)
            continue;
        if (!p.terms_.empty() && p.terms_.back().degree == t.degree)
            p.terms_.back().count += t.count;
        else
            p.terms_.push_back(std::move(t));
    }
    return p;
}

Count WeightPoly::coefficient(int degree) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                               [](const Monomial& m, int d) { return m.degree < d; });
    if (it != terms_.end() && it->degree == degree)
        return it->count;
    return 0;
}

Count WeightPoly::total() const
{
    Count sum = 0;
    for (const auto& t : terms_)
        sum += t.count;
    return sum;
}

WeightPoly WeightPoly::truncated(int cap) const
{
    WeightPoly p(cap);
    for (const auto& t : terms_)
        if (t.degree <= cap)
            p.terms_.push_back(t);
    return p;
}

std::vector<std::pair<int, std::string>> WeightPoly::to_pairs() const
{
    std::vector<std::pair<int, std::string>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        out.emplace_back(t.degree, t.count.str());
    return out;
}

WeightPoly WeightPoly::from_pairs(const std::vector<std::pair<int, std::string>>& pairs, int w_cap)
{
    std::vector<Monomial> terms;
    terms.reserve(pairs.size());
    for (const auto& [w, text] : pairs) {
        if (text.empty() || !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw std::invalid_argument("WeightPoly: count '" + text + "' is not a decimal integer");
        terms.push_back({w, Count(text)});
    }
    return from_terms(std::move(terms), w_cap);
}

std::string WeightPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (t.degree == 0) {
            os << t.count;
            continue;
        }
        if (t.count != 1)
            os << t.count;
        os << 'X';
        if (t.degree != 1)
            os << '^' << t.degree;
    }
    return os.str();
}

WeightPoly operator+(const WeightPoly& a, const WeightPoly& b)
{
    WeightPoly out = a;
    out += b;
    return out;
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& b)
{
    if (b.w_cap_ != w_cap_)
        throw std::invalid_argument("WeightPoly: adding polynomials with different caps (" +
                                    std::to_string(w_cap_) + " vs " + std::to_string(b.w_cap_) + ")");
    if (b.terms_.empty())
        return *this;
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + b.terms_.size());
    auto i = terms_.begin();
    auto j = b.terms_.begin();
    while (i != terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != terms_.end() && i->degree < j->degree)) {
            merged.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->degree < i->degree) {
            merged.push_back(*j++);
        } else {
            merged.push_back({i->degree, i->count + j->count});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

namespace {

// Counts below 2^32 multiply and accumulate without leaving machine words.
bool all_small(const std::vector<Monomial>& terms)
{
    for (const auto& t : terms)
        if (t.count.backend().size() > 1 || t.count > 0xffffffffu)
            return false;
    return true;
}

} // namespace

WeightPoly mul_trunc(const WeightPoly& a, const WeightPoly& b, int w_end)
{
    WeightPoly out(w_end);
    if (a.terms_.empty() || b.terms_.empty())
        return out;
    const int lo = a.terms_.front().degree + b.terms_.front().degree;
    if (lo > w_end)
        return out;
    const int hi = std::min(w_end, a.terms_.back().degree + b.terms_.back().degree);
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1);

    if (all_small(a.terms_) && all_small(b.terms_)) {
        unsigned __int128 acc[64] = {};
        std::vector<unsigned __int128> heap;
        unsigned __int128* sums = acc;
        if (width > 64) {
            heap.assign(width, 0);
            sums = heap.data();
        }
        for (const auto& x : a.terms_) {
            if (x.degree + b.terms_.front().degree > hi)
                break;
            const auto xc = static_cast<std::uint64_t>(x.count);
            for (const auto& y : b.terms_) {
                const int d = x.degree + y.degree;
                if (d > hi)
                    break;
                sums[d - lo] += static_cast<unsigned __int128>(xc * static_cast<std::uint64_t>(y.count));
            }
        }
        out.terms_.reserve(width);
        for (int d = lo; d <= hi; ++d) {
            const unsigned __int128 c = sums[d - lo];
            if (c == 0)
                continue;
            Count v = static_cast<std::uint64_t>(c >> 64);
            if (v != 0)
                v <<= 64;
            v += static_cast<std::uint64_t>(c);
            out.terms_.push_back({d, std::move(v)});
        }
        return out;
    }

    std::vector<Count> acc(width);
    for (const auto& x : a.terms_) {
        if (x.degree + b.terms_.front().degree > hi)
            break;
        for (const auto& y : b.terms_) {
            const int d = x.degree + y.degree;
            if (d > hi)
                break;
            acc[static_cast<std::size_t>(d - lo)] += x.count * y.count;
        }
    }
    out.terms_.reserve(width);
    for (int d = lo; d <= hi; ++d) {
        auto& c = acc[static_cast<std::size_t>(d - lo)];
        if (c != 0)
            out.terms_.push_back({d, std::move(c)});
    }
    return out;
}

std::optional<Monomial> lowest(const WeightPoly& a)
{
    if (a.is_zero())
        return std::nullopt;
    return a.terms().front();
}

WeightPoly div_pow2(const WeightPoly& a, unsigned k)
{
    if (k == 0)
        return a;
    WeightPoly out(a.w_cap_);
    out.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) {
        if (boost::multiprecision::lsb(t.count) < k)
            throw ConsistencyError("div_pow2: count " + t.count.str() + " at degree " + std::to_string(t.degree) +
                                   " is not divisible by 2^" + std::to_string(k));
        out.terms_.push_back({t.degree, t.count >> k});
    }
    return out;
}

} // namespace pspec
