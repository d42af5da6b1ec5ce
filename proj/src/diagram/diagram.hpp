#pragma once

#include "flow/decompose.hpp"

#include <optional>
#include <string>

namespace flatdeck {

struct DiagramCylinder {
    std::vector<int> top, bottom;  // 0-based letters, read left to right
    friend bool operator==(const DiagramCylinder&, const DiagramCylinder&) = default;
};

// Cylinder diagram: every letter occurs once among the tops and once among
// the bottoms.  Equality is literal; use canonical() for isomorphism.
struct CylinderDiagram {
    std::vector<DiagramCylinder> cylinders;

    int letter_count() const;
    // Throws std::invalid_argument unless every letter 0..m-1 appears once
    // on each side.
    void check() const;
    std::string to_text() const;  // one line per cylinder, 1-based letters
    static CylinderDiagram parse(const std::string& text);
    friend bool operator==(const CylinderDiagram&, const CylinderDiagram&) = default;
};

// Geometric parameters of a diagram.  The bottom word's first letter starts
// at x = 0 and the top word's first letter at x = twist, modulo the width.
struct DiagramParams {
    std::vector<Scalar> lengths;  // per letter
    std::vector<Scalar> heights;  // per cylinder
    std::vector<Scalar> twists;   // per cylinder
};

Scalar cylinder_width(const DiagramCylinder& c, const DiagramParams& p);

struct Labeling {
    CylinderDiagram diagram;
    std::optional<DiagramParams> params;
    std::vector<int> letter_map;    // old letter -> canonical letter
    std::vector<int> cylinder_map;  // canonical cylinder -> old cylinder
};

// Canonical relabeling: cylinders sorted by top size, letters numbered by
// (cylinder, position in top word), bottoms written at their least rotation;
// the lexicographically least choice wins, ties broken by the parameter
// vector (lengths, heights, twists) when parameters are given.
Labeling canonical(const CylinderDiagram& d, const DiagramParams* params = nullptr);

bool diagrams_isomorphic(const CylinderDiagram& a, const CylinderDiagram& b);

// Diagram and parameters read off a decomposition, letters = saddle ids.
std::pair<CylinderDiagram, DiagramParams> raw_diagram(const Decomposition& d);
Labeling diagram_of(const Decomposition& d);

enum class ModelTag { ThreeCyl_I, ThreeCyl_II, TwoCyl_23, TwoCyl_14, OneCyl };

const char* model_name(ModelTag t);
std::optional<ModelTag> model_from_name(const std::string& name);
const std::vector<ModelTag>& all_models();
const CylinderDiagram& reference_diagram(ModelTag t);

// The model the diagram is isomorphic to, or nothing (Unrecognized).
std::optional<ModelTag> classify_h4hyp(const CylinderDiagram& d);

PolygonSurface build_from_diagram(const CylinderDiagram& d, const DiagramParams& p);

struct InvolutionReport {
    bool found = false;
    std::vector<int> involution;  // letter -> letter
    int fixed_letters = 0;
    int expected_fixed = 0;  // 8 - 1 - 2 * cylinders
    bool passes() const { return found && fixed_letters == expected_fixed; }
};

// Looks for a letter involution sending each top word onto the reversed
// bottom word of the same cylinder and preserving lengths.  Among several
// candidates one with the expected fixed count is preferred.
InvolutionReport involution_check(const CylinderDiagram& d, const std::vector<Scalar>& lengths);
InvolutionReport involution_check(const Decomposition& d);

}  // namespace flatdeck
