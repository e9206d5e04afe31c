#include "mshuff/multiset.hpp"

#include <cctype>

namespace mshuff {

Multiset::Multiset(std::initializer_list<std::pair<Symbol, Nat>> entries) {
    for (const auto& [symbol, count] : entries)
        add(symbol, count);
}

Multiset Multiset::monomial(const Symbol& s, const Nat& count) {
    if (count <= 0)
        throw DomainError("monomial needs a count >= 1");
    Multiset out;
    out.add(s, count);
    return out;
}

void Multiset::add(const Symbol& s, const Nat& count) {
    if (count < 0)
        throw DomainError("negative count");
    if (count == 0)
        return;
    entries_[s] += count;
}

Nat Multiset::count(const Symbol& s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? Nat(0) : it->second;
}

Nat Multiset::norm() const {
    Nat total = 0;
    for (const auto& [symbol, count] : entries_)
        total += count;
    return total;
}

std::string Multiset::render() const {
    if (entries_.empty())
        return "0";
    std::string out;
    for (const auto& [symbol, count] : entries_) {
        if (!out.empty())
            out += '+';
        if (count != 1)
            out += nat_str(count);
        out += symbol.render();
    }
    return out;
}

Multiset Multiset::parse(std::string_view text) {
    if (text == "0")
        return Multiset();
    Multiset out;
    std::size_t start = 0;
    int depth = 0;
    auto take_term = [&](std::string_view term) {
        if (term.empty())
            throw ParseError("empty term in multiset '" + std::string(text) + "'");
        std::size_t i = 0;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
            ++i;
        Nat count = 1;
        if (i > 0 && i < term.size())
            count = nat_parse(term.substr(0, i));
        else
            i = 0; // all digits: the whole term is an atom
        if (count == 0)
            throw ParseError("zero coefficient in '" + std::string(term) + "'");
        out.add(Symbol::parse(term.substr(i)), count);
    };
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || (text[i] == '+' && depth == 0)) {
            take_term(text.substr(start, i - start));
            start = i + 1;
        } else if (text[i] == '(') {
            ++depth;
        } else if (text[i] == ')') {
            --depth;
        }
    }
    return out;
}

Multiset add(const Multiset& x, const Multiset& y) {
    Multiset out = x;
    for (const auto& [symbol, count] : y.entries())
        out.add(symbol, count);
    return out;
}

Multiset scalar_mul(const Nat& k, const Multiset& x) {
    if (k < 0)
        throw DomainError("negative scalar");
    Multiset out;
    if (k == 0)
        return out;
    for (const auto& [symbol, count] : x.entries())
        out.add(symbol, k * count);
    return out;
}

Multiset product(const Multiset& x, const Multiset& y) {
    Multiset out;
    for (const auto& [xs, xc] : x.entries())
        for (const auto& [ys, yc] : y.entries())
            out.add(xs.concat(ys), xc * yc);
    return out;
}

Multiset intersect(const Multiset& x, const Multiset& y) {
    Multiset out;
    for (const auto& [symbol, count] : x.entries()) {
        const Nat other = y.count(symbol);
        if (other != 0)
            out.add(symbol, count * other);
    }
    return out;
}

bool disjoint(const Multiset& x, const Multiset& y) {
    return intersect(x, y).is_zero();
}

double entropy_w(const Multiset& x) {
    if (x.is_zero())
        return 0.0;
    const double log_norm = nat_log2(x.norm());
    double total = 0.0;
    for (const auto& [symbol, count] : x.entries())
        total += nat_to_double(count) * (log_norm - nat_log2(count));
    return total;
}

double entropy_w_seq(std::span<const double> values) {
    double sum = 0.0;
    for (double v : values) {
        if (v < 0.0)
            throw DomainError("entropy_w_seq: negative input");
        sum += v;
    }
    if (sum == 0.0)
        return 0.0;
    const double log_sum = std::log2(sum);
    double total = 0.0;
    for (double v : values)
        if (v > 0.0)
            total += v * (log_sum - std::log2(v));
    return total;
}

std::string DyadicClass::render() const {
    switch (kind) {
    case DyadicKind::not_dyadic:
        return "NotDyadic";
    case DyadicKind::dyadic:
        return "Dyadic";
    case DyadicKind::scalar_dyadic:
        return "ScalarDyadic(k=" + nat_str(scalar) + ", base=" + base.render() + ")";
    }
    return "NotDyadic";
}

DyadicClass classify_dyadic(const Multiset& x) {
    if (x.is_zero())
        throw DomainError("classify_dyadic: zero multiset");

    // X = m * D with D dyadic iff every count shares the odd part m and the
    // power-of-two parts sum to a power of two. m = 1 is the dyadic case.
    const Nat m = odd_part(x.entries().begin()->second);
    Multiset base;
    Nat base_norm = 0;
    for (const auto& [symbol, count] : x.entries()) {
        if (odd_part(count) != m)
            return DyadicClass{};
        const Nat pow2 = Nat(1) << trailing_zero_bits(count);
        base.add(symbol, pow2);
        base_norm += pow2;
    }
    if (!is_power_of_two(base_norm))
        return DyadicClass{};
    if (m == 1)
        return DyadicClass{DyadicKind::dyadic, 1, x};
    return DyadicClass{DyadicKind::scalar_dyadic, m, base};
}

} // namespace mshuff
