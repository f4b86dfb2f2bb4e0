#pragma once

#include <string>
#include <vector>

#include "altcohom/detect.hpp"

namespace altcohom::detect {

// One instance of a relation of the presentation, checked on components with at most 8 points.
// Numbers: 1-4 transfer-product relations, 5-7 cup relations, 8 coproduct of a transfer product,
// 9-10 coproducts of generators, 11 coproduct of a cup product.
struct RelationOutcome {
    int number = 0;
    std::string label;
    RelationReport::Verdict verdict = RelationReport::Verdict::Pass;
    std::string detail;
};

std::vector<RelationOutcome> relation_suite();
// deliberately false statements; every one of them must fail
std::vector<RelationOutcome> negative_controls();

}  // namespace altcohom::detect
