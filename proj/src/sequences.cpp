#include "degent/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace degent {

namespace {

long sum_of(const DegreeSequence& s) {
    return std::accumulate(s.begin(), s.end(), 0L);
}

void check_non_increasing(const DegreeSequence& s) {
    if (!std::is_sorted(s.begin(), s.end(), std::greater<>()))
        throw std::invalid_argument("sequence must be non-increasing");
    if (!s.empty() && s.back() < 0) throw std::invalid_argument("negative entry");
}

// Non-increasing sequences of length n, sum total, entries <= max_part,
// ascending lexicographic order.
void gen_partitions(int n, long total, int max_part,
                    DegreeSequence& cur, std::vector<DegreeSequence>& out) {
    if (n == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    const int prev = cur.empty() ? max_part : std::min(cur.back(), max_part);
    for (int v = 0; v <= prev && v <= total; ++v) {
        if (total - v > static_cast<long>(n - 1) * v) continue;  // later entries <= v
        cur.push_back(v);
        gen_partitions(n - 1, total - v, max_part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

MajorizeResult majorize_compare(const DegreeSequence& a_in, const DegreeSequence& b_in) {
    check_non_increasing(a_in);
    check_non_increasing(b_in);
    if (sum_of(a_in) != sum_of(b_in))
        throw std::invalid_argument("majorization requires equal sums");
    DegreeSequence a = a_in, b = b_in;
    const size_t n = std::max(a.size(), b.size());
    a.resize(n, 0);
    b.resize(n, 0);
    if (a == b) return MajorizeResult::equal;
    long pa = 0, pb = 0;
    bool a_ge = true, b_ge = true;
    for (size_t i = 0; i + 1 < n; ++i) {
        pa += a[i];
        pb += b[i];
        if (pa < pb) a_ge = false;
        if (pb < pa) b_ge = false;
    }
    if (a_ge) return MajorizeResult::a_strictly_majorizes;
    if (b_ge) return MajorizeResult::b_strictly_majorizes;
    return MajorizeResult::incomparable;
}

DegreeSequence conjugate(const DegreeSequence& c) {
    check_non_increasing(c);
    const int maxc = c.empty() ? 0 : c.front();
    DegreeSequence out(static_cast<size_t>(maxc), 0);
    for (int v : c)
        for (int i = 0; i < v; ++i) ++out[static_cast<size_t>(i)];
    return out;
}

bool is_graphical(DegreeSequence d) {
    std::sort(d.begin(), d.end(), std::greater<>());
    if (!d.empty() && d.back() < 0) return false;
    const long n = static_cast<long>(d.size());
    if (!d.empty() && d.front() > n - 1) return false;
    long total = sum_of(d);
    if (total % 2 != 0) return false;
    long prefix = 0;
    for (long k = 1; k <= n; ++k) {
        prefix += d[static_cast<size_t>(k - 1)];
        long rhs = k * (k - 1);
        for (long i = k; i < n; ++i) rhs += std::min<long>(d[static_cast<size_t>(i)], k);
        if (prefix > rhs) return false;
    }
    return true;
}

bool is_bigraphical(const BipartitePair& p) {
    check_non_increasing(p.x);
    check_non_increasing(p.y);
    if (sum_of(p.x) != sum_of(p.y)) return false;
    if (!p.x.empty() && p.x.front() > static_cast<long>(p.y.size())) return false;
    if (!p.y.empty() && p.y.front() > static_cast<long>(p.x.size())) return false;
    // Gale-Ryser
    long prefix = 0;
    for (size_t k = 1; k <= p.x.size(); ++k) {
        prefix += p.x[k - 1];
        long rhs = 0;
        for (int dy : p.y) rhs += std::min<long>(dy, static_cast<long>(k));
        if (prefix > rhs) return false;
    }
    return true;
}

std::vector<DegreeSequence> enumerate_graphical(int n, int m) {
    if (n < 0 || n > 12) throw std::invalid_argument("enumerate_graphical requires 0 <= n <= 12");
    if (m < 0 || 2L * m > static_cast<long>(n) * (n - 1))
        throw std::invalid_argument("m out of range");
    std::vector<DegreeSequence> raw;
    DegreeSequence cur;
    gen_partitions(n, 2L * m, n - 1 < 0 ? 0 : n - 1, cur, raw);
    std::vector<DegreeSequence> out;
    for (auto& s : raw)
        if (is_graphical(s)) out.push_back(std::move(s));
    return out;
}

std::vector<BipartitePair> enumerate_bigraphical(int n, int m) {
    if (n < 0 || n > 12) throw std::invalid_argument("enumerate_bigraphical requires 0 <= n <= 12");
    const long cap = static_cast<long>((n + 1) / 2) * (n / 2);
    if (m < 0 || m > cap) throw std::invalid_argument("m out of range");
    std::set<std::pair<DegreeSequence, DegreeSequence>> seen;
    std::vector<BipartitePair> out;
    for (int a = 1; a < n; ++a) {
        const int b = n - a;
        std::vector<DegreeSequence> xs, ys;
        DegreeSequence cur;
        gen_partitions(a, m, b, cur, xs);
        gen_partitions(b, m, a, cur, ys);
        for (const auto& x : xs) {
            for (const auto& y : ys) {
                if (!is_bigraphical({x, y})) continue;
                std::pair<size_t, DegreeSequence> kx{x.size(), x}, ky{y.size(), y};
                if (ky < kx) std::swap(kx, ky);
                if (seen.insert({std::move(kx.second), std::move(ky.second)}).second)
                    out.push_back({x, y});
            }
        }
    }
    return out;
}

}  // namespace degent
