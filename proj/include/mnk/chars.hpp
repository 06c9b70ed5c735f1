#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mnk/puiseux.hpp"

namespace mnk::chars {

using exact::Cyclotomic;
using fps::PuiseuxSeries;

/// One multiplicative term coef * prod_d eta(d tau)^{r_d} * prod_d E4(d tau)^{s_d}.
struct EtaTerm {
    Cyclotomic coef;
    std::map<long, long> eta;  // d -> r_d
    std::map<long, long> e4;   // d -> s_d
    /// 2*weight = sum r_d + 8 sum s_d; must vanish for modular invariance of weight.
    long weight2() const;
};

struct EtaCombination {
    std::vector<EtaTerm> terms;
    Rat add_const = Rat(0);
    bool weight_zero() const;
};

struct ClassRecord {
    std::string name;
    long n = 1;            // order of the class
    long h = 1;            // h | n, h | 24
    int sign = +1;         // type n|h(sign)
    bool fricke = true;
    long level = 1;        // N = n*h
    EtaCombination series;                 // T_g
    std::optional<EtaCombination> twist;   // F-hat_{n/2,1} data for the 4|2 case
    std::map<long, std::string> powers;    // d | n, d > 1 -> class of g^d
    std::vector<Rat> checksum;             // first 10 coefficients from the pole
};

class Dataset {
  public:
    static Dataset load(const std::string& path);
    static Dataset from_json_text(const std::string& text);

    const ClassRecord& at(const std::string& name) const;
    bool has(const std::string& name) const { return recs_.count(name) != 0; }
    const std::map<std::string, ClassRecord>& records() const { return recs_; }

  private:
    std::map<std::string, ClassRecord> recs_;
};

/// prod_{n>=1} (1 - q^n), complete below `hi`.
PuiseuxSeries euler_product(const Rat& hi);
/// eta = q^{1/24} prod_{i<=order} (1 - q^i), truncated past q^{order + 1/24}.
PuiseuxSeries eta_series(long order);
/// E4 = 1 + 240 sum sigma_3(n) q^n, complete below `hi`.
PuiseuxSeries e4_series(const Rat& hi);

/// Expands the combination as a q-series complete below `hi`.
/// Throws std::invalid_argument when a term has nonzero weight.
PuiseuxSeries expand_eta_combination(const EtaCombination& e, const Rat& hi);

/// tau -> -1/tau: eta(d tau) -> d^{-1/2} eta(tau/d) etc.; the collected
/// prefactor must be rational (throws otherwise).
PuiseuxSeries s_transform(const EtaCombination& e, const Rat& hi);

/// tau -> tau + j termwise: c q^r -> c e(j r) q^r.
PuiseuxSeries tau_shift(const PuiseuxSeries& f, long j);

enum class SeriesRole { McKayThompson, TwistedCharacter, FhatComponent, ModuleCharacter };

struct CharacterSeries {
    PuiseuxSeries series;
    SeriesRole role = SeriesRole::FhatComponent;
};

/// F-hat_{i,j} for the level-N family of `rec`: the character of the preferred
/// lift of g^j on V(g^i), assembled case by case (units mod N by shifted
/// S-transform, multiples of n from untwisted series, and the half-twist row
/// of the 4|2 case from the record's twist data).
CharacterSeries fhat(const Dataset& ds, const ClassRecord& rec, long i, long j, const Rat& hi);

/// Tr q^{L(0)-c/24} of the Heisenberg module: q^{lambda_norm/2} eta^{-dimV}.
PuiseuxSeries heisenberg_char(const Rat& lambda_norm, long dim_v, long order);

/// q^h / prod (1-q^n); coefficient of q^{h+m} is p(m).
PuiseuxSeries verma_char(const Rat& h, long order);

/// Multiplicities m(h) with char = sum m(h) verma_char(h), computed to the
/// input's truncation. Negative or non-integer values are returned as-is.
std::map<Rat, Rat> verma_decompose(const PuiseuxSeries& ch);

/// Dimension of Quant(V (x) pi^{1,1}_p) for p != 0: coefficient of
/// q^{1 - p_norm} in Tr q^{L(0)}; absent coefficients read as 0.
Int quant_dim(const PuiseuxSeries& char_v, const Rat& p_norm);
/// p = 0 case: 2 dim V_0 + dim V_1.
Int quant_dim_zero_vector(const PuiseuxSeries& char_v);

/// Cross-validates the covariant and BRST countings: quant_dim on the
/// unshifted character equals the coefficient of q^{-p_norm} in the shifted
/// character Tr q^{L(0)-1}.
bool brst_euler_check(const PuiseuxSeries& char_v_shifted, const Rat& p_norm);

struct ValidationIssue {
    std::string record;
    std::string message;
};

/// Checksum, level, power-map closure, Fricke/sign and weight checks.
std::vector<ValidationIssue> validate_data(const Dataset& ds);

}  // namespace mnk::chars
