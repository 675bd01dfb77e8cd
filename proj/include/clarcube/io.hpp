#ifndef CLARCUBE_IO_HPP
#define CLARCUBE_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "clarcube/clar_cover.hpp"
#include "clarcube/presets.hpp"
#include "clarcube/resonance.hpp"

namespace clarcube {

// Text formats:
//   benzenoid: one "q r" pair per line, '#' starts a comment
//   tubulene:  a single "n m rings" line
//   fullerene: line i lists the three neighbors of vertex i, 0-based
MolecularGraph read_molecular_graph(std::istream& in, std::optional<Family> declared);
MolecularGraph read_molecular_graph_file(const std::string& path, std::optional<Family> declared);

std::string format_preset_file(const PresetInput& input);
void write_preset_file(const std::string& path, const PresetInput& input);

std::optional<Family> parse_family_name(const std::string& name);

std::string resonance_to_dot(const ResonanceGraph& r);
std::string resonance_to_json(const ResonanceGraph& r);
std::string cover_to_json(const GeneralizedClarCover& c);

} // namespace clarcube

#endif
