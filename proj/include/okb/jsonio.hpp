#pragma once

// JSON (de)serialization for the file formats: polytopes, graded valuation
// data, toric and surface inputs. Rationals travel as "p/q" strings so no
// precision is ever lost; inputs also accept plain integers and [num, den]
// pairs.

#include "okb/polytope.hpp"
#include "okb/semigroup.hpp"
#include "okb/surface.hpp"
#include "okb/toric.hpp"

#include <json.hpp>

#include <string>

namespace okb {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);

RatVec vec_from_json(const Json& j);
Json vec_to_json(const RatVec& v);

Polytope polytope_from_json(const Json& j);
Json polytope_to_json(const Polytope& P);

GradedValuationData graded_data_from_json(const Json& j);
Json graded_data_to_json(const GradedValuationData& data);

// {"lambda": [[1,0],[0,1]], "order": "deglex", "center": "p1"}
QuasiMonomialValuation valuation_from_json(const Json& j);
Json valuation_to_json(const QuasiMonomialValuation& v);

// {"vertices": [[0,0],[1,0],[0,1]], "chosen": [0,1,2], "k_max": 50}
struct ToricInputFile {
    std::vector<RatVec> vertices;
    std::vector<int> chosen;
    long k_max = 50;
};
ToricInputFile toric_input_from_json(const Json& j);

// {"N": 2, "curves": "delpezzo" | [[d, m_1, ...]], "L": [d, m_1, ...], "rays": true}
struct SurfaceInputFile {
    int N = 0;
    SurfaceSpec spec;
    PicardClass L;
    bool rays = true;
};
SurfaceInputFile surface_input_from_json(const Json& j);

PicardClass picard_from_json(const Json& j, int N);
Json picard_to_json(const PicardClass& c);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace okb
