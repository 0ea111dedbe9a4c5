#include "prook/subsets.hpp"

namespace prook {

std::vector<int> elements(Mask s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(subset_size(s)));
    while (s) {
        int low = std::countr_zero(s);
        out.push_back(low + 1);
        s &= s - 1;
    }
    return out;
}

Mask mask_of(std::initializer_list<int> elems) {
    Mask m = 0;
    for (int e : elems) {
        if (e < 1 || e > kMaxSize)
            throw std::out_of_range("set element out of range");
        if (contains(m, e))
            throw std::invalid_argument("duplicate set element");
        m |= single(e);
    }
    return m;
}

Mask mask_of(const std::vector<int>& elems) {
    Mask m = 0;
    for (int e : elems) {
        if (e < 1 || e > kMaxSize)
            throw std::out_of_range("set element out of range");
        if (contains(m, e))
            throw std::invalid_argument("duplicate set element");
        m |= single(e);
    }
    return m;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n || n < 0)
        return 0;
    if (n > 2 * kMaxSize)
        throw std::out_of_range("binomial argument too large");
    if (k > n - k)
        k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact at every step: r*(n-k+i) has i | it
    }
    return r;
}

bool next_k_subset(Mask& m, int n) {
    if (m == 0)
        return false; // the empty set is the only 0-subset
    // Gosper's hack: next mask with the same popcount.
    Mask c = m & (0u - m);
    Mask r = m + c;
    Mask next = (((m ^ r) >> 2) / c) | r;
    if (next & ~full_mask(n))
        return false;
    m = next;
    return true;
}

std::vector<Mask> k_subsets(int n, int k) {
    if (n < 0 || n > kMaxSize)
        throw std::out_of_range("subset universe out of range");
    std::vector<Mask> out;
    if (k < 0 || k > n)
        return out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    Mask m = full_mask(k);
    out.push_back(m);
    while (next_k_subset(m, n))
        out.push_back(m);
    return out;
}

} // namespace prook
