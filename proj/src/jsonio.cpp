#include "okb/jsonio.hpp"

#include <fstream>

namespace okb {

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
        return make_rational(Int(j[0].get<long long>()), Int(j[1].get<long long>()));
    throw SchemaError("expected a rational as \"p/q\", integer, or [num, den]");
}

Json rational_to_json(const Rational& r) { return Json(rational_str(r)); }

RatVec vec_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("expected an array for a vector");
    RatVec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
    return v;
}

Json vec_to_json(const RatVec& v) {
    Json arr = Json::array();
    for (const auto& x : v.e) arr.push_back(rational_to_json(x));
    return arr;
}

Polytope polytope_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("expected a polytope object");
    if (!j.contains("dim")) throw SchemaError("polytope is missing \"dim\"");
    int dim = j.at("dim").get<int>();
    if (j.contains("empty") && j.at("empty").get<bool>()) return Polytope::make_empty(dim);
    if (!j.contains("vertices")) throw SchemaError("polytope is missing \"vertices\"");
    std::vector<RatVec> vertices;
    for (const auto& v : j.at("vertices")) {
        RatVec vec = vec_from_json(v);
        if ((int)vec.dim() != dim) throw SchemaError("polytope vertex of wrong dimension");
        vertices.push_back(vec);
    }
    // Vertices determine everything; the halfspace block, when present, is
    // validated against the reconstruction.
    Polytope P = convex_hull(vertices);
    if (j.contains("halfspaces")) {
        for (const auto& h : j.at("halfspaces")) {
            Halfspace hs(vec_from_json(h.at("normal")), rational_from_json(h.at("offset")));
            hs.canonicalize();
            bool found = false;
            for (const auto& mine : P.halfspaces)
                if (mine == hs) found = true;
            if (!found) throw SchemaError("polytope halfspace block disagrees with its vertices");
        }
    }
    return P;
}

Json polytope_to_json(const Polytope& P) {
    Json j = Json::object();
    j["dim"] = P.dim;
    if (P.empty()) {
        j["empty"] = true;
        j["vertices"] = Json::array();
        j["halfspaces"] = Json::array();
        j["coordinate_facets"] = Json::array();
        return j;
    }
    Json verts = Json::array();
    for (const auto& v : P.vertices) verts.push_back(vec_to_json(v));
    j["vertices"] = verts;
    Json hs = Json::array();
    for (const auto& h : P.halfspaces) {
        Json one = Json::object();
        one["normal"] = vec_to_json(h.normal);
        one["offset"] = rational_to_json(h.offset);
        hs.push_back(one);
    }
    j["halfspaces"] = hs;
    j["coordinate_facets"] = P.coordinate_facets;
    return j;
}

GradedValuationData graded_data_from_json(const Json& j) {
    GradedValuationData data;
    if (!j.contains("n") || !j.contains("N") || !j.contains("order") || !j.contains("levels"))
        throw SchemaError("graded data requires \"n\", \"N\", \"order\" and \"levels\"");
    data.n = j.at("n").get<int>();
    data.N = j.at("N").get<int>();
    data.order = order_from_name(j.at("order").get<std::string>());
    for (const auto& [key, records] : j.at("levels").items()) {
        long k;
        try {
            k = std::stol(key);
        } catch (const std::exception&) {
            throw SchemaError("level keys must be integers, got '" + key + "'");
        }
        std::vector<SectionRecord> recs;
        for (const auto& rec : records) {
            SectionRecord r;
            if ((int)rec.size() != data.N)
                throw SchemaError("record must hold exactly N valuation vectors");
            for (const auto& val : rec) {
                IntVec entries;
                for (const auto& x : val) entries.push_back(x.get<std::int64_t>());
                if ((int)entries.size() != data.n)
                    throw SchemaError("valuation vector of wrong dimension");
                r.vals.emplace_back(std::move(entries), data.order);
            }
            recs.push_back(std::move(r));
        }
        data.levels[k] = std::move(recs);
    }
    if (j.contains("h0"))
        for (const auto& [key, count] : j.at("h0").items())
            data.h0[std::stol(key)] = count.get<long>();
    return data;
}

Json graded_data_to_json(const GradedValuationData& data) {
    Json j = Json::object();
    j["n"] = data.n;
    j["N"] = data.N;
    j["order"] = order_name(data.order);
    Json levels = Json::object();
    for (const auto& [k, recs] : data.levels) {
        Json level = Json::array();
        for (const auto& rec : recs) {
            Json tuple = Json::array();
            for (const auto& val : rec.vals) tuple.push_back(val.entries);
            level.push_back(tuple);
        }
        levels[std::to_string(k)] = level;
    }
    j["levels"] = levels;
    Json h0 = Json::object();
    for (const auto& [k, count] : data.h0) h0[std::to_string(k)] = count;
    j["h0"] = h0;
    return j;
}

QuasiMonomialValuation valuation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("lambda"))
        throw SchemaError("valuation requires a \"lambda\" matrix");
    QuasiMonomialValuation v;
    for (const auto& row : j.at("lambda")) {
        IntVec r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw SchemaError("lambda entries must be integers");
            r.push_back(x.get<std::int64_t>());
        }
        v.lambda.push_back(std::move(r));
    }
    for (const auto& row : v.lambda)
        if (row.size() != v.lambda.size())
            throw SchemaError("lambda matrix must be square");
    if (j.contains("order")) v.order = order_from_name(j.at("order").get<std::string>());
    if (j.contains("center")) v.center_label = j.at("center").get<std::string>();
    return v;
}

Json valuation_to_json(const QuasiMonomialValuation& v) {
    Json j = Json::object();
    Json lambda = Json::array();
    for (const auto& row : v.lambda) lambda.push_back(row);
    j["lambda"] = lambda;
    j["order"] = order_name(v.order);
    j["center"] = v.center_label;
    return j;
}

ToricInputFile toric_input_from_json(const Json& j) {
    ToricInputFile in;
    if (!j.contains("vertices")) throw SchemaError("toric input is missing \"vertices\"");
    for (const auto& v : j.at("vertices")) in.vertices.push_back(vec_from_json(v));
    if (j.contains("chosen"))
        for (const auto& c : j.at("chosen")) in.chosen.push_back(c.get<int>());
    if (j.contains("k_max")) in.k_max = j.at("k_max").get<long>();
    return in;
}

PicardClass picard_from_json(const Json& j, int N) {
    if (!j.is_array() || (int)j.size() != N + 1)
        throw SchemaError("Picard class must be [d, m_1, ..., m_N]");
    PicardClass c;
    c.d = rational_from_json(j[0]);
    for (int i = 0; i < N; ++i) c.m.push_back(rational_from_json(j[(std::size_t)i + 1]));
    return c;
}

Json picard_to_json(const PicardClass& c) {
    Json arr = Json::array();
    arr.push_back(rational_to_json(c.d));
    for (const auto& x : c.m) arr.push_back(rational_to_json(x));
    return arr;
}

SurfaceInputFile surface_input_from_json(const Json& j) {
    SurfaceInputFile in;
    if (!j.contains("N")) throw SchemaError("surface input is missing \"N\"");
    in.N = j.at("N").get<int>();
    if (!j.contains("curves")) throw SchemaError("surface input is missing \"curves\"");
    const Json& curves = j.at("curves");
    if (curves.is_string()) {
        if (curves.get<std::string>() != "delpezzo")
            throw SchemaError("curves must be \"delpezzo\" or an array of classes");
        in.spec = SurfaceSpec::delpezzo(in.N);
    } else if (curves.is_array()) {
        std::vector<PicardClass> list;
        for (const auto& c : curves) list.push_back(picard_from_json(c, in.N));
        in.spec = SurfaceSpec::with_curves(in.N, std::move(list));
    } else {
        throw SchemaError("curves must be \"delpezzo\" or an array of classes");
    }
    in.L = j.contains("L") ? picard_from_json(j.at("L"), in.N) : hyperplane_class(in.N);
    if (j.contains("rays")) in.rays = j.at("rays").get<bool>();
    return in;
}

Json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SchemaError("cannot open input file '" + path + "'");
    Json j = Json::parse(f, nullptr, false);
    if (j.is_discarded()) throw SchemaError("malformed JSON in '" + path + "'");
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream f(path);
    if (!f) throw SchemaError("cannot open output file '" + path + "'");
    f << j.dump(2) << '\n';
}

}  // namespace okb
