#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mnk/puiseux.hpp"

namespace mnk::fps {

/// The six fundamental coordinates. Negated combinations ((w-z), (-t), ...)
/// are not representable; callers rewrite them with the e(s/2) rule first.
enum class Coord : int { Z = 0, W = 1, T = 2, ZW = 3, ZT = 4, WT = 5 };

Coord parse_coord(const std::string& text);  // rejects w-z, t-z, t-w, -z, ...
std::string coord_str(Coord c);

/// Exponent vector over the six coordinates.
struct Exp6 {
    std::array<Rat, 6> v{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    Rat& operator[](Coord c) { return v[(int)c]; }
    const Rat& operator[](Coord c) const { return v[(int)c]; }
    bool operator<(const Exp6& o) const;
    bool operator==(const Exp6& o) const { return v == o.v; }
    std::string str() const;
};

/// Finite sum of monomials over the six coordinates with exact coefficients.
/// Intermediate expansion states are not canonical across dependent
/// coordinates; equality is only meaningful in a three-coordinate frame.
class MSeries {
  public:
    const std::map<Exp6, Cyclotomic>& terms() const { return terms_; }
    void add(const Exp6& e, const Cyclotomic& c);
    static MSeries monomial(const Exp6& e, Cyclotomic c = Cyclotomic::one());

  private:
    std::map<Exp6, Cyclotomic> terms_;
};

/// One licensed rewrite X^s -> e(half*s/2) * B^s * (1 + sign*S/B)^s.
struct Rule {
    Coord target, big, small;
    int sign;  // +1 or -1
    int half;  // phase e(half*s/2); conv-5 carries -1, negations +1
};

/// The convention table, keyed by (coordinate being expanded, big coordinate).
/// Throws std::invalid_argument for unlicensed pairs. `mutate_conv5` flips the
/// sign in the exponential of convention 5 (test hook).
Rule rule_for(Coord target, Coord big, bool mutate_conv5 = false);

/// Applies one rewrite to every monomial, binomials capped at `cap` terms.
MSeries apply_rule(const MSeries& s, const Rule& r, long cap);

// ---------------------------------------------------------------------------
// two-variable embeddings (Lemma basic-embeddings items 1-4)

enum class PairFrame { ZFirst, WFirst, Z_ZW, W_ZW };
PairFrame parse_pair_frame(const std::string& text);

/// Expands z^a w^b (z-w)^c into the chosen frame to binomial order `order`.
MSeries embed_pair(const Rat& a, const Rat& b, const Rat& c, PairFrame frame, long order);

/// The formal Taylor isomorphism V((z))((z-w)) -> V((w))((z-w)) (and back):
/// substitute z = w + (z-w) and re-expand, to binomial order `order`.
/// `forward` = z-to-w. Rejects input supported on coordinates outside
/// {z or w, z-w}.
MSeries taylor_shift(const MSeries& f, bool forward, long order);

// ---------------------------------------------------------------------------
// the iterated-expansion diagrams

enum class DiagramId { Star, Octagon1, Octagon2 };
DiagramId parse_diagram(const std::string& text);

struct QuadSpec {
    std::string name;          // label of the common target
    std::vector<std::string> path1, path2;  // space labels after the source
};

/// All pairs of distinct two-arrow composites from the source space to a
/// common terminal frame of the given diagram.
const std::vector<QuadSpec>& quadrilaterals(DiagramId d);

/// Space labels of a diagram (for CLI validation / help).
std::vector<std::string> space_labels(DiagramId d);

struct ExpParams {
    Rat a, b, c, d, f, g;  // exponents of z, w, t, z-w, z-t, w-t
};

struct PathCheck {
    bool ok = true;
    std::string detail;  // first discrepancy, when ok is false
};

/// Expands z^a w^b t^c (z-w)^d (z-t)^f (w-t)^g along both composites and
/// compares all coefficients in the depth-`order` window of the common
/// terminal frame. Paths are sequences of space labels (the source "ijkl"
/// may be included or omitted). Throws on arrows not in the diagram.
PathCheck check_paths(const ExpParams& p, DiagramId d, std::vector<std::string> path1,
                      std::vector<std::string> path2, long order, bool mutate_conv5 = false);

/// Runs every quadrilateral of the diagram; stops at the first failure.
PathCheck check_diagram(const ExpParams& p, DiagramId d, long order, bool mutate_conv5 = false);

}  // namespace mnk::fps
