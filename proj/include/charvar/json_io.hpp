#pragma once
#include <map>
#include <string>
#include <vector>

#include "charvar/abelian.hpp"
#include "charvar/certificate.hpp"
#include "charvar/hypotheses.hpp"
#include "charvar/poly.hpp"
#include "charvar/pushoff.hpp"

namespace charvar {

/* File loaders.  All throw ParseError with the offending path (and position,
 * when the JSON itself is malformed). */

/* {"vertices": [...], "maximal_simplices": [[...], ...]}; vertices absent
 * from every maximal simplex become isolated points. */
SimplicialComplex load_complex_file(const std::string& path);

/* Either the complex schema or the shorthand: a bare list of simplices,
 * face-closed on load. */
Subcomplex load_subcomplex_file(const std::string& path);

/* Complex schema plus an optional "pinned" simplex list; the derived
 * boundary is always added to the pinned part. */
SurfaceComplex load_surface_file(const std::string& path);

/* {"vertex_images": {"a": "x", ...}}; other keys are ignored, so the richer
 * files written by the pushoff command re-load with the same function. */
std::map<Vertex, Vertex> load_map_file(const std::string& path);

PushoffCertificate load_certificate_file(const std::string& path);

/* The rich map files written by `pushoff --out`: vertex_images together with
 * the surface and target complexes, reassembled into a checked map. */
SimplicialMap load_pushed_map_file(const std::string& path);

/* Serializers; all output is deterministic. */
std::string complex_to_json(const SimplicialComplex& X);
std::string certificate_to_json(const PushoffCertificate& cert);
/* vertex_images plus the surface and target complexes the map runs between. */
std::string pushed_map_to_json(const SimplicialMap& h);
std::string group_to_json(const FgAbelianGroup& g);
std::string homology_to_json(const std::vector<FgAbelianGroup>& H);
std::string polynomial_to_json(const IntPolynomial& p);
std::string hypothesis_report_to_json(const HypothesisReport& report);

/* Parsers for round-trips and tests. */
SimplicialComplex parse_complex_json(const std::string& text);
PushoffCertificate parse_certificate_json(const std::string& text);
FgAbelianGroup parse_group_json(const std::string& text);
IntPolynomial parse_polynomial_json(const std::string& text);

} // namespace charvar
