#include "uavpso/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <vector>

#include "uavpso/errors.hpp"
#include "uavpso/oracle.hpp"
#include "uavpso/rng.hpp"

namespace uavpso {

std::string_view to_string(ComplexityClass cls) {
    switch (cls) {
        case ComplexityClass::Low: return "low";
        case ComplexityClass::Medium: return "medium";
        default: return "high";
    }
}

std::optional<ComplexityClass> complexity_from_name(std::string_view name) {
    if (name == "low") return ComplexityClass::Low;
    if (name == "medium") return ComplexityClass::Medium;
    if (name == "high") return ComplexityClass::High;
    return std::nullopt;
}

namespace {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

/// Round through the canonical 6-significant-digit rendering so that
/// serialized files reparse to the exact same value.
double quantize6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::strtod(buf, nullptr);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t begin = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > begin) tokens.push_back(s.substr(begin, i - begin));
    }
    return tokens;
}

double parse_number(std::string_view token, int line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw SyntaxError(line_no, "expected a number, got '" + std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        throw ValidationError("line " + std::to_string(line_no) + ": non-finite number '" +
                              std::string(token) + "'");
    }
    return value;
}

}  // namespace

void validate_scenario(const Scenario& s) {
    const double coords[] = {s.bounds.x_min, s.bounds.x_max, s.bounds.y_min, s.bounds.y_max,
                             s.start.x,      s.start.y,      s.goal.x,      s.goal.y};
    for (double c : coords) {
        if (!std::isfinite(c)) throw ValidationError("non-finite coordinate");
    }
    if (!(s.bounds.x_min < s.bounds.x_max) || !(s.bounds.y_min < s.bounds.y_max)) {
        throw ValidationError("bounds are empty or inverted");
    }
    if (!s.bounds.contains(s.start)) throw ValidationError("start lies outside bounds");
    if (!s.bounds.contains(s.goal)) throw ValidationError("goal lies outside bounds");
    for (std::size_t i = 0; i < s.threats.size(); ++i) {
        const Threat& t = s.threats[i];
        const std::string label = "threat " + std::to_string(i);
        if (!(t.radius > 0.0)) throw ValidationError(label + " has non-positive radius");
        if (!s.bounds.contains(t.center)) {
            throw ValidationError(label + " center lies outside bounds");
        }
        if (distance(s.start, t.center) <= t.radius) {
            throw ValidationError("start lies inside " + label);
        }
        if (distance(s.goal, t.center) <= t.radius) {
            throw ValidationError("goal lies inside " + label);
        }
    }
}

Scenario parse_scenario(std::string_view text) {
    Scenario scenario;
    bool have_name = false, have_bounds = false, have_start = false, have_goal = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto tokens = split_tokens(line);
        const std::string_view key = tokens[0];

        if (key == "scenario") {
            if (have_name) throw DuplicateKey(line_no, "scenario");
            std::string_view rest = trim(line.substr(key.size()));
            if (rest.empty()) throw SyntaxError(line_no, "scenario needs a name");
            scenario.name = std::string(rest);
            have_name = true;
        } else if (key == "bounds") {
            if (have_bounds) throw DuplicateKey(line_no, "bounds");
            if (tokens.size() != 5) throw SyntaxError(line_no, "bounds needs 4 numbers");
            scenario.bounds.x_min = parse_number(tokens[1], line_no);
            scenario.bounds.y_min = parse_number(tokens[2], line_no);
            scenario.bounds.x_max = parse_number(tokens[3], line_no);
            scenario.bounds.y_max = parse_number(tokens[4], line_no);
            have_bounds = true;
        } else if (key == "start" || key == "goal") {
            bool& seen = key == "start" ? have_start : have_goal;
            if (seen) throw DuplicateKey(line_no, std::string(key));
            if (tokens.size() != 3) {
                throw SyntaxError(line_no, std::string(key) + " needs 2 numbers");
            }
            Point p{parse_number(tokens[1], line_no), parse_number(tokens[2], line_no)};
            (key == "start" ? scenario.start : scenario.goal) = p;
            seen = true;
        } else if (key == "threat") {
            if (tokens.size() != 5) {
                throw SyntaxError(line_no, "threat needs a kind and 3 numbers");
            }
            Threat t;
            if (tokens[1] == "radar") {
                t.kind = ThreatKind::Radar;
            } else if (tokens[1] == "artillery") {
                t.kind = ThreatKind::Artillery;
            } else {
                throw SyntaxError(line_no, "unknown threat kind '" + std::string(tokens[1]) + "'");
            }
            t.center.x = parse_number(tokens[2], line_no);
            t.center.y = parse_number(tokens[3], line_no);
            t.radius = parse_number(tokens[4], line_no);
            scenario.threats.push_back(t);
        } else {
            throw SyntaxError(line_no, "unknown key '" + std::string(key) + "'");
        }
    }

    if (!have_name) throw SyntaxError(0, "missing required key 'scenario'");
    if (!have_bounds) throw SyntaxError(0, "missing required key 'bounds'");
    if (!have_start) throw SyntaxError(0, "missing required key 'start'");
    if (!have_goal) throw SyntaxError(0, "missing required key 'goal'");

    validate_scenario(scenario);
    return scenario;
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream out;
    out << "scenario " << s.name << "\n";
    out << "bounds " << format_number(s.bounds.x_min) << " " << format_number(s.bounds.y_min)
        << " " << format_number(s.bounds.x_max) << " " << format_number(s.bounds.y_max) << "\n";
    out << "start " << format_number(s.start.x) << " " << format_number(s.start.y) << "\n";
    out << "goal " << format_number(s.goal.x) << " " << format_number(s.goal.y) << "\n";
    for (const Threat& t : s.threats) {
        out << "threat " << (t.kind == ThreatKind::Radar ? "radar" : "artillery") << " "
            << format_number(t.center.x) << " " << format_number(t.center.y) << " "
            << format_number(t.radius) << "\n";
    }
    return out.str();
}

Scenario generate_scenario(ComplexityClass cls, std::uint64_t seed,
                           const GeneratorConstants& constants) {
    const int class_index = static_cast<int>(cls);
    std::mt19937_64 rng(seed);

    Scenario scenario;
    scenario.name = std::string(to_string(cls)) + "-" + std::to_string(seed);
    scenario.bounds = constants.bounds;
    scenario.start = constants.start;
    scenario.goal = constants.goal;

    int attempts = 0;
    while (true) {
        scenario.threats.clear();
        struct Batch {
            ThreatKind kind;
            int count;
            double r_min, r_max;
        };
        const Batch batches[2] = {
            {ThreatKind::Radar, GeneratorConstants::radar_count[class_index],
             constants.radar_radius_min, constants.radar_radius_max},
            {ThreatKind::Artillery, GeneratorConstants::artillery_count[class_index],
             constants.artillery_radius_min, constants.artillery_radius_max},
        };
        for (const Batch& batch : batches) {
            int placed = 0;
            while (placed < batch.count) {
                if (++attempts > constants.max_attempts) {
                    throw GenerationFailed("scenario generation exhausted " +
                                           std::to_string(constants.max_attempts) + " attempts");
                }
                Threat t;
                t.kind = batch.kind;
                t.center.x = quantize6(uniform_in(rng, constants.bounds.x_min, constants.bounds.x_max));
                t.center.y = quantize6(uniform_in(rng, constants.bounds.y_min, constants.bounds.y_max));
                t.radius = quantize6(uniform_in(rng, batch.r_min, batch.r_max));
                if (point_segment_distance(t.center, constants.start, constants.goal) >
                    constants.corridor_half_width) {
                    continue;
                }
                if (distance(constants.start, t.center) <= t.radius) continue;
                if (distance(constants.goal, t.center) <= t.radius) continue;
                scenario.threats.push_back(t);
                ++placed;
            }
        }
        try {
            grid_shortest_path(scenario, GridSpec{constants.solvability_resolution});
            break;  // solvable world
        } catch (const StartBlocked&) {
        } catch (const GoalBlocked&) {
        } catch (const NoPath&) {
        }
    }
    return scenario;
}

}  // namespace uavpso
