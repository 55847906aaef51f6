#include "cnsf/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cnsf {

namespace {

int checked_sum(const std::vector<int>& parts) {
    long long total = 0;
    for (int p : parts) {
        total += p;
    }
    if (total > std::numeric_limits<int>::max()) {
        throw InputError("composition degree overflows int");
    }
    return static_cast<int>(total);
}

} // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) {
            throw InputError("composition parts must be positive");
        }
    }
}

int Composition::degree() const {
    return checked_sum(parts_);
}

Composition Composition::concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    return Composition(std::move(parts));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw InputError("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw InputError("partition parts must be weakly decreasing");
        }
    }
}

int Partition::degree() const {
    return checked_sum(parts_);
}

bool graded_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    const long long da = std::accumulate(a.begin(), a.end(), 0LL);
    const long long db = std::accumulate(b.begin(), b.end(), 0LL);
    if (da != db) {
        return da < db;
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<int> descent_set(const Composition& c) {
    std::vector<int> descents;
    if (c.length() <= 1) {
        return descents;
    }
    descents.reserve(c.length() - 1);
    int sum = 0;
    for (int i = 0; i + 1 < c.length(); ++i) {
        sum += c.parts()[i];
        descents.push_back(sum);
    }
    return descents;
}

Composition composition_from_descents(int degree, const std::vector<int>& descents) {
    if (degree < 0) {
        throw InputError("degree must be nonnegative");
    }
    std::vector<int> parts;
    int prev = 0;
    for (int d : descents) {
        if (d <= prev || d >= degree) {
            throw InputError("descents must increase strictly within (0, degree)");
        }
        parts.push_back(d - prev);
        prev = d;
    }
    if (degree > prev) {
        parts.push_back(degree - prev);
    }
    return Composition(std::move(parts));
}

bool refines(const Composition& a, const Composition& b) {
    if (a.degree() != b.degree()) {
        throw InputError("refinement comparison requires equal degrees");
    }
    const std::vector<int> da = descent_set(a);
    const std::vector<int> db = descent_set(b);
    return std::includes(da.begin(), da.end(), db.begin(), db.end());
}

std::vector<Composition> coarsenings(const Composition& a) {
    const int splits = std::max(a.length() - 1, 0);
    if (splits > 30) {
        throw InputError("composition too long to enumerate coarsenings");
    }
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << splits);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << splits); ++mask) {
        std::vector<int> parts;
        for (int i = 0; i < a.length(); ++i) {
            if (i > 0 && ((mask >> (i - 1)) & 1u)) {
                parts.back() += a.parts()[i];
            } else {
                parts.push_back(a.parts()[i]);
            }
        }
        out.emplace_back(Composition(std::move(parts)));
    }
    return out;
}

Partition sort_to_partition(const Composition& a) {
    std::vector<int> parts = a.parts();
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

namespace {

void emit_compositions(int n, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (n == 0) {
        out.emplace_back(Composition(prefix));
        return;
    }
    for (int first = 1; first <= n; ++first) {
        prefix.push_back(first);
        emit_compositions(n - first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions_of(int n, int cap) {
    if (n < 0) {
        throw InputError("cannot enumerate compositions of a negative integer");
    }
    if (n > cap) {
        throw InputError("composition enumeration cap exceeded (n=" + std::to_string(n) +
                         " > cap " + std::to_string(cap) + ")");
    }
    std::vector<Composition> out;
    out.reserve(n == 0 ? 1 : (std::size_t{1} << (n - 1)));
    std::vector<int> prefix;
    emit_compositions(n, prefix, out);
    return out;
}

namespace {

std::string bracketed(const std::vector<int>& parts) {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(parts[i]);
    }
    out += "]";
    return out;
}

} // namespace

std::string to_text(const Composition& c) {
    return bracketed(c.parts());
}

std::string to_text(const Partition& p) {
    return bracketed(p.parts());
}

} // namespace cnsf
