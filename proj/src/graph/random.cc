#include <chipkit/random.hh>

namespace chipkit {

auto SplitMix64::next() -> std::uint64_t
{
    std::uint64_t z = (_state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

auto SplitMix64::below(std::uint64_t bound) -> std::uint64_t
{
    // rejection sampling keeps the draw exactly uniform
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do
        x = next();
    while (x >= limit);
    return x % bound;
}

auto SplitMix64::between(long long lo, long long hi) -> long long
{
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

auto SplitMix64::unit() -> double
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

}
