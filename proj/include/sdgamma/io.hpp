#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdgamma/complex.hpp"
#include "sdgamma/constructions.hpp"
#include "sdgamma/eulerian.hpp"
#include "sdgamma/poly.hpp"

namespace sdgamma {

// Structured input: exactly one of the fields is present. Big integers may
// be decimal strings or plain JSON numbers.
struct InputDocument {
    std::optional<std::vector<std::vector<Vertex>>> facets;
    std::optional<CountVector> h;
    std::optional<CountVector> f;
};

// Throws validation_error with the parser's line/position context.
InputDocument parse_input_document(const std::string& text);

// "1,5,10,10,5,1" -> CountVector.
CountVector parse_count_list(const std::string& csv, VectorRole role);

// JSON fragment "[[1,2],[2,3]]" -> facet list.
std::vector<std::vector<Vertex>> parse_facet_list(const std::string& text);

struct VectorsReport {
    int d = 0;
    CountVector f, h, g;
    std::optional<CountVector> gamma;
    std::string gamma_note;
    CountVector h_sd;
    std::optional<CountVector> gamma_sd;
    std::string gamma_sd_note;
};

VectorsReport vectors_report_from_facets(const std::vector<std::vector<Vertex>>& facets);
VectorsReport vectors_report_from_h(const CountVector& h);
std::string render_text(const VectorsReport&);
std::string render_json(const VectorsReport&);

struct SubdivideReport {
    std::vector<Face> vertex_faces;  // parent face of each subdivision vertex, 1-based
    SimplicialComplex sd;
    CountVector f, h;
};

SubdivideReport subdivide_report(const std::vector<std::vector<Vertex>>& facets);
std::string render_text(const SubdivideReport&);
std::string render_json(const SubdivideReport&);

struct EulerianReport {
    int n = 0;
    std::vector<std::vector<Int>> table;  // [descents][first letter - 1]
    IntPolynomial eulerian;
    std::vector<GammaFamily> families;
    std::string primed_note;  // set when the primed range is empty
};

EulerianReport eulerian_report(int n);
std::string render_text(const EulerianReport&);
std::string render_json(const EulerianReport&);

struct FfkCheckReport {
    CountVector f;
    int d = 0;
    bool ok = false;
    std::optional<FfkViolation> violation;
};

FfkCheckReport ffk_check_report(const CountVector& f, int d);
std::string render_text(const FfkCheckReport&);
std::string render_json(const FfkCheckReport&);

struct WitnessReport {
    CountVector h;
    CountVector gamma;
    int modulus = 0;
    ColoredComplex witness;
    bool coloring_ok = false;
    bool balanced = false;
};

WitnessReport witness_report(const CountVector& h);
std::string render_text(const WitnessReport&);
std::string render_json(const WitnessReport&);

// Parses a witness document back into a verifiable object; used to round-trip
// emitted output.
struct ParsedWitness {
    CountVector gamma;
    int modulus = 0;
    ColoredComplex witness;
};
ParsedWitness parse_witness_document(const std::string& text);

struct VerifySuite {
    std::string name;
    bool pass = true;
    std::vector<std::string> details = {};  // failures only
};

struct VerifyReport {
    int n_max = 0;
    std::vector<VerifySuite> suites;
    bool all_pass = true;
};

// Batch identity/inequality/certificate verification up to n_max. `threads`
// spreads independent suites over a pool; results are identical regardless.
VerifyReport run_verification(int n_max, int threads = 1, int enumeration_cap = kDefaultEnumerationCap);
std::string render_text(const VerifyReport&);
std::string render_json(const VerifyReport&);

}  // namespace sdgamma
