#include "hrc/sturm.hpp"

#include <stdexcept>

namespace hrc {

SturmChain::SturmChain(const QPoly& f) {
    QPoly g = gcd_q(f, f.derivative());
    if (g.degree() > 0) {
        QPoly rem;
        sf_ = f.divrem(g, rem);
    } else {
        sf_ = f;
    }
    sf_ = sf_.monic();
    chain_.push_back(sf_);
    if (sf_.degree() >= 1) chain_.push_back(sf_.derivative());
    while (chain_.back().degree() >= 1) {
        QPoly r = chain_[chain_.size() - 2].mod(chain_.back());
        if (r.is_zero()) break;
        chain_.push_back(-r);
    }
}

static int sgn(const mpq_class& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int SturmChain::variations_at(const mpq_class& x) const {
    int v = 0, last = 0;
    for (const auto& p : chain_) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) v++;
        last = s;
    }
    return v;
}

int SturmChain::variations_at_inf(int sign) const {
    int v = 0, last = 0;
    for (const auto& p : chain_) {
        if (p.is_zero()) continue;
        int s = sgn(p.lc());
        if (sign < 0 && p.degree() % 2 == 1) s = -s;
        if (last != 0 && s != last) v++;
        last = s;
    }
    return v;
}

int SturmChain::count_real_roots() const {
    if (sf_.degree() <= 0) return 0;
    return variations_at_inf(-1) - variations_at_inf(+1);
}

int SturmChain::count_in(const mpq_class& a, const mpq_class& b) const {
    if (sf_.degree() <= 0) return 0;
    return variations_at(a) - variations_at(b);
}

std::vector<std::pair<mpq_class, mpq_class>> SturmChain::isolate_roots() const {
    std::vector<std::pair<mpq_class, mpq_class>> out;
    int total = count_real_roots();
    if (total == 0) return out;
    mpq_class b = root_bound(sf_);
    // recursive bisection of (-b-1, b]
    struct Frame { mpq_class lo, hi; int count; };
    std::vector<Frame> stack;
    stack.push_back({mpq_class(-b - 1), b, total});
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.count == 1) {
            out.emplace_back(fr.lo, fr.hi);
            continue;
        }
        mpq_class mid = (fr.lo + fr.hi) / 2;
        int left = count_in(fr.lo, mid);
        if (left > 0) stack.push_back({fr.lo, mid, left});
        if (fr.count - left > 0) stack.push_back({mid, fr.hi, fr.count - left});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& c) { return a.first < c.first; });
    return out;
}

void SturmChain::refine(std::pair<mpq_class, mpq_class>& iv) const {
    mpq_class mid = (iv.first + iv.second) / 2;
    if (count_in(iv.first, mid) == 1) iv.second = mid;
    else iv.first = mid;
}

int sign_at_root(const SturmChain& f, std::pair<mpq_class, mpq_class>& iv, const QPoly& g) {
    // interval Horner on [lo, hi]; refine until the sign is unambiguous
    for (int iter = 0; iter < 4096; iter++) {
        mpq_class lo = 0, hi = 0;  // interval value, built top down
        for (int i = g.degree(); i >= 0; i--) {
            // [lo,hi] * [a,b] + c with a = iv.first, b = iv.second
            const mpq_class &a = iv.first, &b = iv.second;
            mpq_class p1 = lo * a, p2 = lo * b, p3 = hi * a, p4 = hi * b;
            mpq_class nlo = std::min(std::min(p1, p2), std::min(p3, p4));
            mpq_class nhi = std::max(std::max(p1, p2), std::max(p3, p4));
            lo = nlo + g[i];
            hi = nhi + g[i];
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        // maybe the root itself is an endpoint hit or interval too wide
        f.refine(iv);
    }
    throw std::runtime_error("sign_at_root: sign did not stabilize (g vanishes at root?)");
}

mpq_class root_bound(const QPoly& f) {
    if (f.degree() < 1) return 1;
    mpq_class m = 0;
    for (int i = 0; i < f.degree(); i++) {
        mpq_class a = abs(f[i] / f.lc());
        if (a > m) m = a;
    }
    return m + 1;
}

} // namespace hrc
