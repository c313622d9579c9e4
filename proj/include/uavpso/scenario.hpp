#ifndef UAVPSO_SCENARIO_HPP
#define UAVPSO_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uavpso/geometry.hpp"

namespace uavpso {

struct Scenario {
    std::string name;
    Bounds bounds;
    Point start;
    Point goal;
    std::vector<Threat> threats;
};

enum class ComplexityClass { Low, Medium, High };

std::string_view to_string(ComplexityClass cls);
std::optional<ComplexityClass> complexity_from_name(std::string_view name);

/// Generator constants. Kept in one place so acceptance-level retuning is a
/// single edit.
struct GeneratorConstants {
    Bounds bounds{0.0, 100.0, 0.0, 100.0};
    Point start{5.0, 5.0};
    Point goal{95.0, 95.0};
    double corridor_half_width = 35.0;
    double radar_radius_min = 6.0;
    double radar_radius_max = 12.0;
    double artillery_radius_min = 3.0;
    double artillery_radius_max = 5.0;
    double solvability_resolution = 1.0;
    int max_attempts = 10000;

    // (radar, artillery) counts per complexity class
    static constexpr int radar_count[3] = {3, 5, 8};
    static constexpr int artillery_count[3] = {2, 5, 8};
};

/// Throws SyntaxError / DuplicateKey / ValidationError.
Scenario parse_scenario(std::string_view text);

/// Canonical line format, 6 significant digits. parse(serialize(s)) == s on
/// the 6-digit-representable value space.
std::string serialize_scenario(const Scenario& s);

/// Throws ValidationError on any invariant breach; used by the parser and
/// available to callers constructing scenarios directly.
void validate_scenario(const Scenario& s);

/// Seeded, deterministic. Threat centers are rejection-sampled inside the
/// start-goal corridor until start and goal are clear of every disc and the
/// grid oracle can solve the world at the solvability resolution.
/// Throws GenerationFailed when the attempt budget is exhausted.
Scenario generate_scenario(ComplexityClass cls, std::uint64_t seed,
                           const GeneratorConstants& constants = {});

}  // namespace uavpso

#endif
