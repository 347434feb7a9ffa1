#include "cohom/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cohom {

namespace {
__extension__ typedef unsigned __int128 uint128;
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i)
{
    MultiIndex e = zero(n);
    e.entries_.at(i) = 1;
    return e;
}

unsigned MultiIndex::total() const noexcept
{
    return std::accumulate(entries_.begin(), entries_.end(), 0u);
}

MultiIndex MultiIndex::incremented(std::size_t i) const
{
    MultiIndex r(*this);
    ++r.entries_.at(i);
    return r;
}

MultiIndex MultiIndex::decremented(std::size_t i) const
{
    if (entries_.at(i) == 0)
        throw std::logic_error("MultiIndex::decremented: entry " + std::to_string(i) + " of " + str() + " is zero");
    MultiIndex r(*this);
    --r.entries_[i];
    return r;
}

std::string MultiIndex::str() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(entries_[i]);
    }
    return s + "]";
}

MultiIndex MultiIndex::parse(const std::string& text)
{
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("malformed multi-index: '" + text + "'");
    std::vector<unsigned> entries;
    const std::string body = text.substr(1, text.size() - 2);
    if (body.empty())
        return MultiIndex(std::move(entries));
    std::size_t start = 0;
    while (true) {
        const auto comma = body.find(',', start);
        const std::string item = body.substr(start, comma - start);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed multi-index: '" + text + "'");
        entries.push_back(static_cast<unsigned>(std::stoul(item)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return MultiIndex(std::move(entries));
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b)
{
    if (auto c = a.total() <=> b.total(); c != 0)
        return c;
    return a.entries_ <=> b.entries_;
}

std::uint64_t binomial(long a, long b)
{
    if (a < 0 || b < 0 || a < b)
        return 0;
    b = std::min(b, a - b);
    uint128 r = 1;
    for (long i = 1; i <= b; ++i) {
        // r * (a - b + i) / i is exact: it is C(a - b + i, i).
        r = r * static_cast<uint128>(a - b + i) / static_cast<uint128>(i);
        if (r > UINT64_MAX)
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t multiset_coeff(long m, long k)
{
    if (k < 0 || m < 0)
        return 0;
    if (k == 0)
        return 1;
    return binomial(m + k - 1, k);
}

namespace {

void enumerate_into(std::vector<unsigned>& prefix, std::size_t n, unsigned remaining, std::vector<MultiIndex>& out)
{
    if (prefix.size() + 1 == n) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned a = 0; a <= remaining; ++a) {
        prefix.push_back(a);
        enumerate_into(prefix, n, remaining - a, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> enumerate_multiindices(std::size_t n, unsigned weight)
{
    std::vector<MultiIndex> out;
    if (n == 0) {
        if (weight == 0)
            out.emplace_back();
        return out;
    }
    out.reserve(multiset_coeff(static_cast<long>(n), weight));
    std::vector<unsigned> prefix;
    prefix.reserve(n);
    enumerate_into(prefix, n, weight, out);
    return out;
}

std::vector<MultiIndex> enumerate_multiindices_upto(std::size_t n, unsigned max_weight)
{
    std::vector<MultiIndex> out;
    for (unsigned w = 0; w <= max_weight; ++w) {
        auto layer = enumerate_multiindices(n, w);
        out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
    }
    return out;
}

} // namespace cohom
