#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "altcohom/alt.hpp"
#include "altcohom/poly.hpp"

namespace altcohom::detect {

using alt::AltClass;
using alt::AltMonomial;

// Restriction target: V_2 in A_4, V_3^+ / V_3^- in A_8, a Young subgroup A_I, or AV_{1,n/2}.
struct Target {
    enum class Kind { VPlus, VMinus, Young, AV };
    Kind kind = Kind::AV;
    int rank = 0;               // V targets: 2 or 3
    std::vector<int> parts;     // Young targets: even part sizes, at least two
    std::string str() const;
    bool operator==(const Target&) const = default;
};

// "V2", "V2+", "V3+", "V3-", "AI=4,4", "AI=2,2,4", "AV"
Target parse_target(const std::string& text);
// targets used to detect classes on n points
std::vector<Target> detection_targets(int n);

// GF(2)-sum of tensors of basis monomials
using MultiTensor = std::set<std::vector<AltMonomial>>;
std::string multi_tensor_str(const MultiTensor& t);

struct Restriction {
    Target target;
    bool determined = true;
    std::string reason;                 // why the image is undetermined
    std::optional<MultiPoly> poly;      // V and AV targets
    std::optional<MultiTensor> tensor;  // Young targets
    bool zero() const;
    std::string str() const;
};

// Throws std::invalid_argument when the class does not live on the target's ambient group.
Restriction restrict_class(const AltClass& x, const Target& target);

struct DetectionReport {
    int n = 0, d = 0;
    std::size_t dim = 0;
    std::size_t v_rank = 0, coproduct_rank = 0, av_rank = 0;
    std::size_t av_undetermined = 0;  // basis classes whose AV image is not given by the rules
    std::size_t combined_rank = 0;    // V and coproducts together
    bool injective = false;
    std::string str() const;
};

// The verdict does not depend on the undetermined AV entries: it requires that the V and
// coproduct data are injective on those basis classes modulo the others, and that all
// data together are injective on the others.
DetectionReport detection_report(int n, int d);

struct TargetCheck {
    Target target;
    enum class Status { Agree, Differ, Undetermined } status = Status::Agree;
};

struct RelationReport {
    enum class Verdict { Pass, Fail, Inconclusive } verdict = Verdict::Pass;
    std::vector<TargetCheck> checks;
    std::string str() const;
};

// Compares both sides on every detection target. AV images are compared on lhs + rhs.
RelationReport verify_relation(const AltClass& lhs, const AltClass& rhs);

std::string verdict_str(RelationReport::Verdict v);

}  // namespace altcohom::detect
