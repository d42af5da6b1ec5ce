#pragma once

#include "deform/deform.hpp"

#include <random>

namespace flatdeck {

// A scenario could not be realized; the message names the failing incidence.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

PolygonSurface model_surface(ModelTag tag, const DiagramParams& params);

// All lengths and heights 1, twists 0.
DiagramParams unit_params(ModelTag tag);

// Lengths constant on the orbits of the hyperelliptic letter involution,
// lengths and heights in [1, 10] with denominator 1 or 2, twists in [0, w).
DiagramParams random_params(ModelTag tag, std::mt19937_64& rng);

struct Figure4 {
    PolygonSurface before, after;
    std::pair<int, int> letters;       // saddles crossed by the two sheared cylinders
    std::pair<Direction, Direction> directions;
    std::pair<Scalar, Scalar> shears;  // shear parameters, opposite signs
};

// Shears the two simple cylinders of the large horizontal cylinder of a
// two-cylinder model so that its core stays horizontal.  `tag` is TwoCyl_23
// or TwoCyl_14.  The first cylinder is twisted by the fraction t of a full
// Dehn twist; t = 0 returns the surface unchanged.
Figure4 figure4_pair(ModelTag tag, const DiagramParams& params, const Scalar& t = Scalar(Rational(1, 2)));

// Parameters of the two rows of the Figure 4 pictures, in unit squares.
DiagramParams figure4_params(ModelTag tag);

// A named cylinder of a configuration: index into the decomposition of `direction`.
struct Designated {
    std::string name;
    Direction direction;
    int index;
};

enum class CaseId { One, TwoA, TwoB, Three };

struct CaseConfig {
    CaseId id;
    PolygonSurface surface;
    std::vector<Designated> cylinders;
    // Case 3 only: the surface after equalizing saddles 1 and 3 and shearing C3.
    std::optional<PolygonSurface> after;
    std::vector<Designated> after_cylinders;

    const Designated& get(const std::string& name) const;
    const Designated& get_after(const std::string& name) const;
};

const char* case_name(CaseId id);
std::optional<CaseId> case_from_name(const std::string& name);
ModelTag case_model(CaseId id);
DiagramParams case_params(CaseId id);

// Builds the case's surface from `params` (reference labels of
// case_model(id)), locates the transverse cylinders by scanning directions
// up to slope `bound` and checks the incidence pattern.
CaseConfig case_config(CaseId id, const DiagramParams& params, int bound = 4);
CaseConfig case_config(CaseId id);

// Surfaces addressable by name: torus, S1, 12gon, the five model names,
// figure4-top[-sheared], figure4-bottom[-sheared], case1, case2A, case2B,
// case3, case3-after.  A seed selects random model parameters.
PolygonSurface corpus_surface(const std::string& name, std::optional<std::uint64_t> seed = std::nullopt);
std::vector<std::string> corpus_names();

}  // namespace flatdeck
