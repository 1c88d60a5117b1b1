#include "kothe/report.hpp"

#include <sstream>

namespace kothe::report {

using nlohmann::json;

std::string fnv1a64_hex(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

bool Report::operator==(const Report& o) const {
    return command == o.command && tool_version == o.tool_version &&
           input_path == o.input_path && input_digest == o.input_digest && field == o.field &&
           seed == o.seed && verdict == o.verdict && representation == o.representation &&
           indecomposables == o.indecomposables &&
           ((matrix_degree.has_value() == o.matrix_degree.has_value()) &&
            (!matrix_degree || (matrix_degree->minimal == o.matrix_degree->minimal &&
                                matrix_degree->sum_q == o.matrix_degree->sum_q))) &&
           summands == o.summands && verification == o.verification;
}

namespace {

json witness_to_json(const decide::Witness& w) {
    return json{{"indecomposable", w.indecomposable},
                {"class_index", w.class_index},
                {"class_label", w.class_label},
                {"c_top", w.c_top},
                {"bound", w.bound}};
}

decide::Witness witness_from_json(const json& j) {
    decide::Witness w;
    w.indecomposable = j.at("indecomposable").get<std::string>();
    w.class_index = j.at("class_index").get<std::size_t>();
    w.class_label = j.at("class_label").get<std::string>();
    w.c_top = j.at("c_top").get<std::size_t>();
    w.bound = j.at("bound").get<std::size_t>();
    return w;
}

template <typename T>
json opt_to_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return json(*v);
}

json verdict_to_json(const decide::Verdict& v) {
    json prof{{"m", v.profile.m},
              {"p", v.profile.p},
              {"q", v.profile.has_q ? json(v.profile.q) : json(nullptr)},
              {"representation_finite", v.profile.representation_finite},
              {"basic", v.profile.basic},
              {"class_labels", v.profile.class_labels},
              {"source", v.profile.source}};
    json w = json::array();
    for (const auto& x : v.witnesses) w.push_back(witness_to_json(x));
    json md = nullptr;
    if (v.matrix_degree_minimal)
        md = json{{"minimal", *v.matrix_degree_minimal},
                  {"sum_q", v.matrix_degree_sum_q.value_or(0)}};
    return json{{"algebra", v.algebra_id},
                {"profile", prof},
                {"k_tested", opt_to_json(v.k_tested)},
                {"is_k_cyclic", opt_to_json(v.is_k_cyclic)},
                {"is_kothe", opt_to_json(v.is_kothe)},
                {"is_multiplicity_free_top", opt_to_json(v.is_multiplicity_free_top)},
                {"is_local_type", opt_to_json(v.is_local_type)},
                {"min_cyclic_k", opt_to_json(v.min_cyclic_k)},
                {"matrix_degree", md},
                {"witnesses", w}};
}

template <typename T>
std::optional<T> opt_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

decide::Verdict verdict_from_json(const json& j) {
    decide::Verdict v;
    v.algebra_id = j.at("algebra").get<std::string>();
    const json& p = j.at("profile");
    v.profile.m = p.at("m").get<std::size_t>();
    v.profile.p = p.at("p").get<std::vector<std::size_t>>();
    if (!p.at("q").is_null()) {
        v.profile.q = p.at("q").get<std::vector<std::size_t>>();
        v.profile.has_q = true;
    }
    v.profile.representation_finite = p.at("representation_finite").get<bool>();
    v.profile.basic = p.at("basic").get<bool>();
    v.profile.class_labels = p.at("class_labels").get<std::vector<std::string>>();
    v.profile.source = p.at("source").get<std::string>();
    v.k_tested = opt_from_json<std::size_t>(j.at("k_tested"));
    v.is_k_cyclic = opt_from_json<bool>(j.at("is_k_cyclic"));
    v.is_kothe = opt_from_json<bool>(j.at("is_kothe"));
    v.is_multiplicity_free_top = opt_from_json<bool>(j.at("is_multiplicity_free_top"));
    v.is_local_type = opt_from_json<bool>(j.at("is_local_type"));
    v.min_cyclic_k = opt_from_json<std::size_t>(j.at("min_cyclic_k"));
    if (!j.at("matrix_degree").is_null()) {
        v.matrix_degree_minimal = j.at("matrix_degree").at("minimal").get<std::size_t>();
        v.matrix_degree_sum_q = j.at("matrix_degree").at("sum_q").get<std::size_t>();
    }
    for (const json& w : j.at("witnesses")) v.witnesses.push_back(witness_from_json(w));
    return v;
}

}  // namespace

json to_json(const Report& r) {
    json j;
    j["format"] = "report-v1";
    j["command"] = r.command;
    j["tool_version"] = r.tool_version;
    j["input_path"] = r.input_path;
    j["input_digest"] = r.input_digest;
    j["field"] = r.field;
    j["seed"] = r.seed;
    j["verdict"] = r.verdict ? verdict_to_json(*r.verdict) : json(nullptr);
    if (r.representation) {
        j["representation"] = json{{"dim", r.representation->dim},
                                   {"c_top", r.representation->c_top},
                                   {"c_total", r.representation->c_total},
                                   {"c_soc", r.representation->c_soc},
                                   {"indecomposable", r.representation->indecomposable},
                                   {"min_generators", r.representation->min_generators}};
    } else {
        j["representation"] = nullptr;
    }
    json il = json::array();
    for (const auto& e : r.indecomposables)
        il.push_back(json{{"dim", e.dim}, {"c_top", e.c_top}, {"c_soc", e.c_soc}});
    j["indecomposables"] = il;
    j["matrix_degree"] = r.matrix_degree ? json{{"minimal", r.matrix_degree->minimal},
                                                {"sum_q", r.matrix_degree->sum_q}}
                                         : json(nullptr);
    json sl = json::array();
    for (const auto& s : r.summands)
        sl.push_back(json{{"dim", s.dim}, {"multiplicity", s.multiplicity}});
    j["summands"] = sl;
    json vl = json::array();
    for (const auto& v : r.verification) vl.push_back(json{{"check", v.check}, {"pass", v.pass}});
    j["verification"] = vl;
    return j;
}

Report from_json(const json& j) {
    KOTHE_CHECK(j.value("format", "") == "report-v1", "expected format \"report-v1\"");
    Report r;
    r.command = j.at("command").get<std::string>();
    r.tool_version = j.at("tool_version").get<std::string>();
    r.input_path = j.at("input_path").get<std::string>();
    r.input_digest = j.at("input_digest").get<std::string>();
    r.field = j.at("field").get<std::string>();
    r.seed = j.at("seed").get<std::string>();
    if (!j.at("verdict").is_null()) r.verdict = verdict_from_json(j.at("verdict"));
    if (!j.at("representation").is_null()) {
        const json& p = j.at("representation");
        r.representation = RepFacts{p.at("dim").get<std::string>(),
                                    p.at("c_top").get<std::string>(),
                                    p.at("c_total").get<std::string>(),
                                    p.at("c_soc").get<std::string>(),
                                    p.at("indecomposable").get<bool>(),
                                    p.at("min_generators").get<std::size_t>()};
    }
    for (const json& e : j.at("indecomposables"))
        r.indecomposables.push_back(IndecEntry{e.at("dim").get<std::string>(),
                                               e.at("c_top").get<std::string>(),
                                               e.at("c_soc").get<std::string>()});
    if (!j.at("matrix_degree").is_null())
        r.matrix_degree =
            decide::MatrixDegree{j.at("matrix_degree").at("minimal").get<std::size_t>(),
                                 j.at("matrix_degree").at("sum_q").get<std::size_t>()};
    for (const json& s : j.at("summands"))
        r.summands.push_back(SummandEntry{s.at("dim").get<std::string>(),
                                          s.at("multiplicity").get<std::size_t>()});
    for (const json& v : j.at("verification"))
        r.verification.push_back(VerifyLine{v.at("check").get<std::string>(),
                                            v.at("pass").get<bool>()});
    return r;
}

std::string dump_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

const char* schema_v1_text() {
    // kept in sync with data/report-v1.schema.json (tests compare the bytes)
    return R"SCHEMA({
  "$id": "report-v1",
  "type": "object",
  "required": ["format", "command", "tool_version", "input_path", "input_digest", "field",
               "seed", "verdict", "representation", "indecomposables", "matrix_degree",
               "summands", "verification"],
  "properties": {
    "format": {"enum": ["report-v1"]},
    "command": {"enum": ["analyze", "indec", "matrix-degree", "decompose", "verify-paper"]},
    "tool_version": {"type": "string"},
    "input_path": {"type": "string"},
    "input_digest": {"type": "string"},
    "field": {"type": "string"},
    "seed": {"type": "string"},
    "verdict": {
      "type": ["object", "null"],
      "required": ["algebra", "profile", "k_tested", "is_k_cyclic", "is_kothe",
                   "is_multiplicity_free_top", "is_local_type", "min_cyclic_k",
                   "matrix_degree", "witnesses"],
      "properties": {
        "algebra": {"type": "string"},
        "profile": {
          "type": "object",
          "required": ["m", "p", "q", "representation_finite", "basic", "class_labels",
                       "source"],
          "properties": {
            "m": {"type": "integer"},
            "p": {"type": "array", "items": {"type": "integer"}},
            "q": {"type": ["array", "null"], "items": {"type": "integer"}},
            "representation_finite": {"type": "boolean"},
            "basic": {"type": "boolean"},
            "class_labels": {"type": "array", "items": {"type": "string"}},
            "source": {"type": "string"}
          }
        },
        "k_tested": {"type": ["integer", "null"]},
        "is_k_cyclic": {"type": ["boolean", "null"]},
        "is_kothe": {"type": ["boolean", "null"]},
        "is_multiplicity_free_top": {"type": ["boolean", "null"]},
        "is_local_type": {"type": ["boolean", "null"]},
        "min_cyclic_k": {"type": ["integer", "null"]},
        "matrix_degree": {
          "type": ["object", "null"],
          "required": ["minimal", "sum_q"],
          "properties": {"minimal": {"type": "integer"}, "sum_q": {"type": "integer"}}
        },
        "witnesses": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["indecomposable", "class_index", "class_label", "c_top", "bound"],
            "properties": {
              "indecomposable": {"type": "string"},
              "class_index": {"type": "integer"},
              "class_label": {"type": "string"},
              "c_top": {"type": "integer"},
              "bound": {"type": "integer"}
            }
          }
        }
      }
    },
    "representation": {
      "type": ["object", "null"],
      "required": ["dim", "c_top", "c_total", "c_soc", "indecomposable", "min_generators"],
      "properties": {
        "dim": {"type": "string"},
        "c_top": {"type": "string"},
        "c_total": {"type": "string"},
        "c_soc": {"type": "string"},
        "indecomposable": {"type": "boolean"},
        "min_generators": {"type": "integer"}
      }
    },
    "indecomposables": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["dim", "c_top", "c_soc"],
        "properties": {
          "dim": {"type": "string"},
          "c_top": {"type": "string"},
          "c_soc": {"type": "string"}
        }
      }
    },
    "matrix_degree": {
      "type": ["object", "null"],
      "required": ["minimal", "sum_q"],
      "properties": {"minimal": {"type": "integer"}, "sum_q": {"type": "integer"}}
    },
    "summands": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["dim", "multiplicity"],
        "properties": {"dim": {"type": "string"}, "multiplicity": {"type": "integer"}}
      }
    },
    "verification": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["check", "pass"],
        "properties": {"check": {"type": "string"}, "pass": {"type": "boolean"}}
      }
    }
  }
}
)SCHEMA";
}

namespace {

bool type_matches(const json& doc, const std::string& t) {
    if (t == "object") return doc.is_object();
    if (t == "array") return doc.is_array();
    if (t == "string") return doc.is_string();
    if (t == "integer") return doc.is_number_integer() || doc.is_number_unsigned();
    if (t == "number") return doc.is_number();
    if (t == "boolean") return doc.is_boolean();
    if (t == "null") return doc.is_null();
    return false;
}

void validate_rec(const json& doc, const json& schema, const std::string& path,
                  std::vector<std::string>& errors) {
    if (schema.contains("enum")) {
        bool ok = false;
        for (const json& v : schema.at("enum"))
            if (v == doc) ok = true;
        if (!ok) errors.push_back(path + ": value not in enum");
        return;
    }
    if (schema.contains("type")) {
        const json& t = schema.at("type");
        bool ok = false;
        if (t.is_string()) ok = type_matches(doc, t.get<std::string>());
        else
            for (const json& tt : t) ok = ok || type_matches(doc, tt.get<std::string>());
        if (!ok) {
            errors.push_back(path + ": wrong type");
            return;
        }
    }
    if (doc.is_object()) {
        if (schema.contains("required"))
            for (const json& k : schema.at("required"))
                if (!doc.contains(k.get<std::string>()))
                    errors.push_back(path + ": missing required key " + k.get<std::string>());
        if (schema.contains("properties"))
            for (auto it = schema.at("properties").begin(); it != schema.at("properties").end();
                 ++it)
                if (doc.contains(it.key()))
                    validate_rec(doc.at(it.key()), it.value(), path + "/" + it.key(), errors);
    }
    if (doc.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const json& el : doc)
            validate_rec(el, schema.at("items"), path + "/" + std::to_string(i++), errors);
    }
}

}  // namespace

std::vector<std::string> validate_against_schema(const json& doc, const json& schema) {
    std::vector<std::string> errors;
    validate_rec(doc, schema, "", errors);
    return errors;
}

}  // namespace kothe::report
