#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "specht/errors.hpp"

namespace specht {

// Young diagram: weakly decreasing positive row lengths. The empty partition
// is the empty vector.
struct Partition {
    std::vector<uint32_t> rows;

    unsigned size() const {
        unsigned s = 0;
        for (uint32_t r : rows)
            s += r;
        return s;
    }
    bool is_valid() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition&) const = default;  // plain lexicographic
};

// r-tuple of Young diagrams, total size n.
struct MultiDiagram {
    std::vector<Partition> components;

    unsigned r() const { return static_cast<unsigned>(components.size()); }
    unsigned size() const;
    unsigned cell_count() const { return size(); }

    bool operator==(const MultiDiagram&) const = default;
    bool operator<(const MultiDiagram&) const = default;

    std::string to_string() const;  // e.g. "((2,1),())"
};

// r-tableau: the cells of each component filled with 1..n, each exactly once.
// fill[component][row][col] holds the number written in that cell.
struct RTableau {
    MultiDiagram shape;
    std::vector<std::vector<std::vector<uint32_t>>> fill;

    bool is_valid() const;     // bijective fill matching the shape
    bool is_standard() const;  // rows and columns strictly increase

    bool operator==(const RTableau&) const = default;
};

// Non-negative integer per cell of the shape.
struct IndexTableau {
    MultiDiagram shape;
    std::vector<std::vector<std::vector<uint32_t>>> entries;

    bool operator==(const IndexTableau&) const = default;
};

// All of P_{r,n}, duplicates-free, deterministic order: compositions of n
// into r parts lexicographically descending, partitions within a component
// lexicographically descending.
std::vector<MultiDiagram> enumerate_diagrams(unsigned r, unsigned n);

std::vector<Partition> enumerate_partitions(unsigned n);

// All standard fillings of the shape, deterministic order.
std::vector<RTableau> enumerate_standard(const MultiDiagram& shape);

// f^lambda = |STab(lambda)|, cross-checked against the multinomial x
// hook-length formula.
uint64_t dimension(const MultiDiagram& shape);

// Reading word: per component, columns left to right, each column bottom to
// top. NotStandard if S is not standard.
std::vector<uint32_t> word(const RTableau& S);

// Index tableau i(S): i(1) = 0; i(k+1) = i(k) + 1 exactly when k+1 sits to
// the left of k in the word.
IndexTableau index_tableau(const RTableau& S);

// Product of the hook lengths.
uint64_t hook_product(const Partition& p);

mpz_class factorial(unsigned n);

}  // namespace specht
