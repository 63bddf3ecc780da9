#pragma once

// Points of CP^1 with rational coordinates, kept in a canonical form so
// that equality and ordering are exact and cheap. Every coordinate pair
// (c_ij : c'_ij) and (d_kl : d'_kl) in the library is a ProjPair.

#include "gn2/rational.hpp"

#include <iosfwd>
#include <string>

namespace gn2 {

/// A point (a : b) of CP^1 over Q, normalized so that b = 1 if b != 0,
/// else a = 1. The three special points are (0:1), (1:0) and (1:1).
class ProjPair {
  public:
    ProjPair() : a_(0), b_(1) {}
    ProjPair(const Rat& a, const Rat& b) { set(a, b); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_ == 0; }           // (0:1)
    bool is_infinity() const { return b_ == 0; }       // (1:0)
    bool is_one() const { return a_ == b_; }           // (1:1)
    /// True on A = {(0:1), (1:0), (1:1)}, the set removed from CP^1_A.
    bool in_special_set() const { return is_zero() || is_infinity() || is_one(); }

    /// (b : a), again canonical.
    ProjPair swapped() const { return ProjPair(b_, a_); }

    friend bool operator==(const ProjPair& x, const ProjPair& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const ProjPair& x, const ProjPair& y) { return !(x == y); }
    friend bool operator<(const ProjPair& x, const ProjPair& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

    std::string str() const;

    static ProjPair zero() { return ProjPair(Rat(0), Rat(1)); }
    static ProjPair infinity() { return ProjPair(Rat(1), Rat(0)); }
    static ProjPair one() { return ProjPair(Rat(1), Rat(1)); }

  private:
    void set(const Rat& a, const Rat& b);
    Rat a_, b_;
};

/// Canonical representative of (a : b). Throws InvalidProjective on (0,0).
ProjPair proj_normalize(const Rat& a, const Rat& b);

/// Parses "(a:b)" or the tokens "0", "1", "inf" used in golden tables.
ProjPair proj_parse(const std::string& s);

std::ostream& operator<<(std::ostream& os, const ProjPair& p);

}  // namespace gn2
