#pragma once

// Brute-force truncation oracle: every sequence block keeps indices 0..N-1
// plus one tail point standing for [N, inf). Elements are bitmasks over that
// finite universe, so lattice operations are plain bit operations.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "slab/balg.hpp"

namespace oracle {

using Bits = std::uint32_t;

inline int truncation_n() {
    const char* v = std::getenv("SLAB_TRUNCATION_N");
    if (!v || !*v) return 8;
    int n = std::atoi(v);
    if (n < 1) return 1;
    return n > 10 ? 10 : n;
}

struct Universe {
    slab::Shape shape;
    int n = 0;
    std::vector<int> start;  // first bit of each block
    int bits = 0;

    Universe(slab::Shape s, int n_) : shape(std::move(s)), n(n_) {
        for (const slab::Block& b : shape) {
            start.push_back(bits);
            bits += b.is_seq() ? n + 1 : static_cast<int>(b.n);
        }
    }
    Bits full() const { return bits >= 32 ? ~Bits(0) : (Bits(1) << bits) - 1; }
    std::size_t size() const { return std::size_t(1) << bits; }
    int tail_bit(std::size_t b) const { return start[b] + n; }

    // Elements of the ideal part: no tail bit on a discrete block.
    bool in_ideal(Bits m) const {
        for (std::size_t b = 0; b < shape.size(); ++b)
            if (shape[b].kind == slab::Kind::DiscreteSeq && (m >> tail_bit(b) & 1)) return false;
        return true;
    }

    slab::Elem elem(Bits m) const {
        slab::Elem e = slab::Elem::zero(shape);
        for (std::size_t b = 0; b < shape.size(); ++b) {
            if (!shape[b].is_seq()) {
                e.parts[b].mask = (m >> start[b]) & ((std::uint64_t(1) << shape[b].n) - 1);
                continue;
            }
            bool tail = m >> tail_bit(b) & 1;
            std::vector<slab::Index> v;
            for (int i = 0; i < n; ++i)
                if (bool(m >> (start[b] + i) & 1) != tail) v.push_back(i);
            e.parts[b].set = tail ? slab::SeqSet::cofin(v) : slab::SeqSet::fin(v);
        }
        return e;
    }

    // Inverse of elem on elements whose excluded and included indices stay below n.
    bool encode(const slab::Elem& e, Bits& out) const {
        out = 0;
        for (std::size_t b = 0; b < shape.size(); ++b) {
            if (!shape[b].is_seq()) {
                out |= Bits(e.parts[b].mask) << start[b];
                continue;
            }
            const slab::SeqSet& s = e.parts[b].set;
            if (s.bound() > n) return false;
            for (int i = 0; i < n; ++i)
                if (s.contains(i)) out |= Bits(1) << (start[b] + i);
            if (s.cof) out |= Bits(1) << tail_bit(b);
        }
        return true;
    }
};

struct Tally {
    std::string name;
    std::size_t cases = 0, failures = 0;
    std::size_t negative = 0;  // instances where brute force says the property fails
    std::string first;  // first disagreement
    void fail(const std::string& what) {
        if (!failures++) first = what;
    }
};

// Each check compares a symbolic decision procedure with brute force over
// truncations 1..n and returns the number of compared instances.
Tally ultrafilter_classification(int n);
Tally prime_ideal_classification(int n);
Tally sup_existence(int n);
Tally cep_atom_reduction(int n);

}  // namespace oracle
