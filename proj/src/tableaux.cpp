#include "specht/tableaux.hpp"

#include <algorithm>
#include <sstream>

namespace specht {

bool Partition::is_valid() const {
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] == 0)
            return false;
        if (i > 0 && rows[i] > rows[i - 1])
            return false;
    }
    return true;
}

unsigned MultiDiagram::size() const {
    unsigned s = 0;
    for (const auto& p : components)
        s += p.size();
    return s;
}

std::string MultiDiagram::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t v = 0; v < components.size(); ++v) {
        if (v > 0)
            os << ",";
        os << "(";
        for (size_t i = 0; i < components[v].rows.size(); ++i) {
            if (i > 0)
                os << ",";
            os << components[v].rows[i];
        }
        os << ")";
    }
    os << ")";
    return os.str();
}

bool RTableau::is_valid() const {
    if (fill.size() != shape.components.size())
        return false;
    unsigned n = shape.size();
    std::vector<bool> seen(n + 1, false);
    for (size_t v = 0; v < fill.size(); ++v) {
        const Partition& part = shape.components[v];
        if (fill[v].size() != part.rows.size())
            return false;
        for (size_t row = 0; row < fill[v].size(); ++row) {
            if (fill[v][row].size() != part.rows[row])
                return false;
            for (uint32_t val : fill[v][row]) {
                if (val < 1 || val > n || seen[val])
                    return false;
                seen[val] = true;
            }
        }
    }
    return true;
}

bool RTableau::is_standard() const {
    if (!is_valid())
        return false;
    for (size_t v = 0; v < fill.size(); ++v) {
        for (size_t row = 0; row < fill[v].size(); ++row) {
            for (size_t col = 0; col < fill[v][row].size(); ++col) {
                if (col > 0 && fill[v][row][col] <= fill[v][row][col - 1])
                    return false;
                if (row > 0 && col < fill[v][row - 1].size() &&
                    fill[v][row][col] <= fill[v][row - 1][col])
                    return false;
            }
        }
    }
    return true;
}

std::vector<Partition> enumerate_partitions(unsigned n) {
    // descending lexicographic: first part from n down to 1
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition{});
        return out;
    }
    std::vector<uint32_t> current;
    auto recurse = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition{current});
            return;
        }
        for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

std::vector<MultiDiagram> enumerate_diagrams(unsigned r, unsigned n) {
    if (r == 0)
        throw SpechtError("enumerate_diagrams with r = 0");
    std::vector<MultiDiagram> out;
    std::vector<unsigned> sizes(r, 0);
    std::vector<Partition> chosen(r);

    auto fill_components = [&](auto&& self, unsigned v) -> void {
        if (v == r) {
            out.push_back(MultiDiagram{chosen});
            return;
        }
        for (const Partition& p : enumerate_partitions(sizes[v])) {
            chosen[v] = p;
            self(self, v + 1);
        }
    };
    // compositions of n into r parts, lexicographically descending
    auto compositions = [&](auto&& self, unsigned v, unsigned remaining) -> void {
        if (v == r - 1) {
            sizes[v] = remaining;
            fill_components(fill_components, 0);
            return;
        }
        for (int m = static_cast<int>(remaining); m >= 0; --m) {
            sizes[v] = static_cast<unsigned>(m);
            self(self, v + 1, remaining - static_cast<unsigned>(m));
        }
    };
    compositions(compositions, 0, n);
    return out;
}

std::vector<RTableau> enumerate_standard(const MultiDiagram& shape) {
    const unsigned n = shape.size();
    const unsigned r = shape.r();

    RTableau t;
    t.shape = shape;
    t.fill.resize(r);
    // 0 marks an empty cell while building
    for (unsigned v = 0; v < r; ++v) {
        t.fill[v].resize(shape.components[v].rows.size());
        for (size_t row = 0; row < t.fill[v].size(); ++row)
            t.fill[v][row].assign(shape.components[v].rows[row], 0);
    }

    std::vector<RTableau> out;
    auto place = [&](auto&& self, unsigned next) -> void {
        if (next > n) {
            out.push_back(t);
            return;
        }
        for (unsigned v = 0; v < r; ++v) {
            for (size_t row = 0; row < t.fill[v].size(); ++row) {
                for (size_t col = 0; col < t.fill[v][row].size(); ++col) {
                    if (t.fill[v][row][col] != 0)
                        continue;
                    bool left_ok = (col == 0) || (t.fill[v][row][col - 1] != 0);
                    bool top_ok = (row == 0) || (t.fill[v][row - 1][col] != 0);
                    if (left_ok && top_ok) {
                        t.fill[v][row][col] = next;
                        self(self, next + 1);
                        t.fill[v][row][col] = 0;
                    }
                    // only the first empty cell of each row is placeable
                    break;
                }
            }
        }
    };
    place(place, 1);
    return out;
}

uint64_t hook_product(const Partition& p) {
    uint64_t prod = 1;
    for (size_t i = 0; i < p.rows.size(); ++i) {
        for (uint32_t j = 0; j < p.rows[i]; ++j) {
            uint32_t arm = p.rows[i] - j - 1;
            uint32_t leg = 0;
            for (size_t k = i + 1; k < p.rows.size(); ++k)
                if (p.rows[k] > j)
                    ++leg;
            prod *= arm + leg + 1;
        }
    }
    return prod;
}

mpz_class factorial(unsigned n) {
    mpz_class f = 1;
    for (unsigned k = 2; k <= n; ++k)
        f *= k;
    return f;
}

uint64_t dimension(const MultiDiagram& shape) {
    uint64_t count = enumerate_standard(shape).size();

    // cross-check against the multinomial x hook-length formula, which
    // collapses to n! / prod of all hook lengths
    mpz_class num = factorial(shape.size());
    mpz_class den = 1;
    for (const auto& part : shape.components)
        den *= mpz_class(static_cast<unsigned long>(hook_product(part)));
    if (num % den != 0 || num / den != mpz_class(static_cast<unsigned long>(count)))
        throw SpechtError("dimension mismatch between enumeration and hook formula for " +
                          shape.to_string());
    return count;
}

std::vector<uint32_t> word(const RTableau& S) {
    if (!S.is_standard())
        throw NotStandard("word of a non-standard tableau");
    std::vector<uint32_t> w;
    w.reserve(S.shape.size());
    for (size_t v = 0; v < S.fill.size(); ++v) {
        const auto& comp = S.fill[v];
        size_t width = comp.empty() ? 0 : comp[0].size();
        for (size_t col = 0; col < width; ++col) {
            // column height: rows whose length exceeds col
            size_t height = 0;
            while (height < comp.size() && comp[height].size() > col)
                ++height;
            for (size_t row = height; row-- > 0;)
                w.push_back(comp[row][col]);
        }
    }
    return w;
}

IndexTableau index_tableau(const RTableau& S) {
    std::vector<uint32_t> w = word(S);
    const unsigned n = static_cast<unsigned>(w.size());

    std::vector<size_t> pos(n + 1, 0);
    for (size_t i = 0; i < w.size(); ++i)
        pos[w[i]] = i;

    std::vector<uint32_t> idx(n + 1, 0);
    for (unsigned k = 1; k < n; ++k)
        idx[k + 1] = idx[k] + (pos[k + 1] < pos[k] ? 1 : 0);

    IndexTableau out;
    out.shape = S.shape;
    out.entries.resize(S.fill.size());
    for (size_t v = 0; v < S.fill.size(); ++v) {
        out.entries[v].resize(S.fill[v].size());
        for (size_t row = 0; row < S.fill[v].size(); ++row) {
            out.entries[v][row].resize(S.fill[v][row].size());
            for (size_t col = 0; col < S.fill[v][row].size(); ++col)
                out.entries[v][row][col] = idx[S.fill[v][row][col]];
        }
    }
    return out;
}

}  // namespace specht
