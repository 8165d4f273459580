#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "awb/fixtures.hpp"

namespace awb::io {

using nlohmann::json;

/// Input-format violation: carries a human-readable location (key path or
/// line/column for syntax errors).
struct parse_error : error {
    using error::error;
};

inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; }
        else ++col;
    }
    return {line, col};
}

/// Named objects of a document. All cross-references are resolved at parse
/// time; dimensions are checked; unknown keys are rejected.
template <Field K>
struct Document {
    std::string field_spec;
    std::map<std::string, Awb<K>> algebras;
    std::map<std::string, Matrix<K>> maps;
    std::map<std::string, Representation<K>> representations;
    struct NamedAction {
        std::string algebra, module;
        ActionData<K> act;
    };
    std::map<std::string, NamedAction> actions;
    struct NamedExtension {
        std::string representation, total, i, p;
        AbelianExtension<K> ext;
    };
    std::map<std::string, NamedExtension> extensions;
    struct NamedCrossedModule {
        std::string m, a, mu, action;
        CrossedModule<K> cm;
    };
    std::map<std::string, NamedCrossedModule> crossed_modules;
    struct NamedCrossedExtension {
        std::string representation, module, sigma, pi;
        CrossedExtension<K> ce;
    };
    std::map<std::string, NamedCrossedExtension> crossed_extensions;
    struct NamedCochain {
        std::string representation;
        int degree;
        KCochain<K> z;
    };
    std::map<std::string, NamedCochain> cochains;
};

namespace detail {

inline void expect_keys(const json& j, const std::string& where,
                        const std::set<std::string>& required,
                        const std::set<std::string>& optional = {}) {
    if (!j.is_object()) throw parse_error(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!required.count(it.key()) && !optional.count(it.key()))
            throw parse_error(where + ": unknown key \"" + it.key() + "\"");
    for (const std::string& k : required)
        if (!j.contains(k)) throw parse_error(where + ": missing key \"" + k + "\"");
}

template <Field K>
K parse_scalar(const json& j, const std::string& where) {
    if (!j.is_string()) throw parse_error(where + ": scalars must be exact fraction strings");
    auto v = K::parse(j.get<std::string>());
    if (!v) throw parse_error(where + ": bad field literal \"" + j.get<std::string>() + "\"");
    return *v;
}

/// Sparse triples [i, j, k, "c"] with 1-based indices.
template <Field K>
Trilinear<K> parse_tensor(const json& j, std::size_t n1, std::size_t n2, std::size_t n3,
                          const std::string& where) {
    Trilinear<K> t(n1, n2, n3);
    if (!j.is_array()) throw parse_error(where + ": expected an array of [i,j,k,coeff] entries");
    for (std::size_t e = 0; e < j.size(); ++e) {
        const json& entry = j[e];
        std::string at = where + "[" + std::to_string(e) + "]";
        if (!entry.is_array() || entry.size() != 4 || !entry[0].is_number_unsigned() ||
            !entry[1].is_number_unsigned() || !entry[2].is_number_unsigned())
            throw parse_error(at + ": expected [i, j, k, \"coeff\"]");
        std::size_t i = entry[0].get<std::size_t>(), jj = entry[1].get<std::size_t>(),
                    k = entry[2].get<std::size_t>();
        if (i < 1 || i > n1 || jj < 1 || jj > n2 || k < 1 || k > n3)
            throw parse_error(at + ": index out of range");
        t.at(i - 1, jj - 1, k - 1) = parse_scalar<K>(entry[3], at);
    }
    return t;
}

template <Field K>
Matrix<K> parse_map(const json& j, const std::string& where) {
    expect_keys(j, where, {"rows", "cols", "entries"});
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw parse_error(where + ": rows/cols must be non-negative integers");
    std::size_t r = j["rows"].get<std::size_t>(), c = j["cols"].get<std::size_t>();
    Matrix<K> m(r, c);
    const json& es = j["entries"];
    if (!es.is_array()) throw parse_error(where + ".entries: expected an array");
    for (std::size_t e = 0; e < es.size(); ++e) {
        const json& entry = es[e];
        std::string at = where + ".entries[" + std::to_string(e) + "]";
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_unsigned() ||
            !entry[1].is_number_unsigned())
            throw parse_error(at + ": expected [row, col, \"coeff\"]");
        std::size_t i = entry[0].get<std::size_t>(), jj = entry[1].get<std::size_t>();
        if (i < 1 || i > r || jj < 1 || jj > c) throw parse_error(at + ": index out of range");
        m(i - 1, jj - 1) = parse_scalar<K>(entry[2], at);
    }
    return m;
}

template <Field K>
ActionData<K> parse_action_tensors(const json& j, std::size_t na, std::size_t nm,
                                   const std::string& where) {
    ActionData<K> act(na, nm);
    act.left = parse_tensor<K>(j.at("left"), na, nm, nm, where + ".left");
    act.right = parse_tensor<K>(j.at("right"), nm, na, nm, where + ".right");
    act.blift = parse_tensor<K>(j.at("blift"), na, nm, nm, where + ".blift");
    act.bright = parse_tensor<K>(j.at("bright"), nm, na, nm, where + ".bright");
    return act;
}

}  // namespace detail

template <Field K>
Document<K> parse_document(const json& root) {
    using detail::expect_keys;
    Document<K> doc;
    expect_keys(root, "document", {"field"},
                {"algebras", "maps", "representations", "actions", "extensions",
                 "crossed_modules", "crossed_extensions", "cochains"});
    doc.field_spec = root.at("field").get<std::string>();
    if (root.contains("algebras"))
        for (auto it = root["algebras"].begin(); it != root["algebras"].end(); ++it) {
            std::string where = "algebras." + it.key();
            const json& j = *it;
            expect_keys(j, where, {"dim", "product", "bracket"}, {"labels"});
            if (!j["dim"].is_number_unsigned()) throw parse_error(where + ".dim: expected an integer");
            std::size_t n = j["dim"].get<std::size_t>();
            Awb<K> a(n);
            if (j.contains("labels")) {
                if (!j["labels"].is_array() || j["labels"].size() != n)
                    throw parse_error(where + ".labels: expected " + std::to_string(n) + " names");
                for (std::size_t i = 0; i < n; ++i) a.labels[i] = j["labels"][i].get<std::string>();
            }
            a.product = detail::parse_tensor<K>(j["product"], n, n, n, where + ".product");
            a.bracket = detail::parse_tensor<K>(j["bracket"], n, n, n, where + ".bracket");
            a.validated = verify_awb(a).ok();
            doc.algebras.emplace(it.key(), std::move(a));
        }
    if (root.contains("maps"))
        for (auto it = root["maps"].begin(); it != root["maps"].end(); ++it)
            doc.maps.emplace(it.key(), detail::parse_map<K>(*it, "maps." + it.key()));
    auto algebra_ref = [&](const json& j, const std::string& where) -> const Awb<K>& {
        std::string name = j.get<std::string>();
        auto it = doc.algebras.find(name);
        if (it == doc.algebras.end()) throw parse_error(where + ": unresolved algebra \"" + name + "\"");
        return it->second;
    };
    auto map_ref = [&](const json& j, const std::string& where) -> const Matrix<K>& {
        std::string name = j.get<std::string>();
        auto it = doc.maps.find(name);
        if (it == doc.maps.end()) throw parse_error(where + ": unresolved map \"" + name + "\"");
        return it->second;
    };
    if (root.contains("representations"))
        for (auto it = root["representations"].begin(); it != root["representations"].end(); ++it) {
            std::string where = "representations." + it.key();
            const json& j = *it;
            expect_keys(j, where, {"algebra", "dim", "left", "right", "blift", "bright"});
            const Awb<K>& a = algebra_ref(j["algebra"], where + ".algebra");
            std::size_t nm = j["dim"].get<std::size_t>();
            Representation<K> rep(a, detail::parse_action_tensors<K>(j, a.dim(), nm, where));
            doc.representations.emplace(it.key(), std::move(rep));
        }
    if (root.contains("actions"))
        for (auto it = root["actions"].begin(); it != root["actions"].end(); ++it) {
            std::string where = "actions." + it.key();
            const json& j = *it;
            expect_keys(j, where, {"algebra", "module", "left", "right", "blift", "bright"});
            const Awb<K>& a = algebra_ref(j["algebra"], where + ".algebra");
            const Awb<K>& m = algebra_ref(j["module"], where + ".module");
            typename Document<K>::NamedAction na;
            na.algebra = j["algebra"].get<std::string>();
            na.module = j["module"].get<std::string>();
            na.act = detail::parse_action_tensors<K>(j, a.dim(), m.dim(), where);
            doc.actions.emplace(it.key(), std::move(na));
        }
    if (root.contains("extensions"))
        for (auto it = root["extensions"].begin(); it != root["extensions"].end(); ++it) {
            std::string where = "extensions." + it.key();
            const json& j = *it;
            expect_keys(j, where, {"representation", "total", "i", "p"});
            auto rit = doc.representations.find(j["representation"].get<std::string>());
            if (rit == doc.representations.end())
                throw parse_error(where + ": unresolved representation");
            typename Document<K>::NamedExtension ne;
            ne.representation = j["representation"].get<std::string>();
            ne.total = j["total"].get<std::string>();
            ne.i = j["i"].get<std::string>();
            ne.p = j["p"].get<std::string>();
            ne.ext.rep = rit->second;
            ne.ext.total = algebra_ref(j["total"], where + ".total");
            ne.ext.i = map_ref(j["i"], where + ".i");
            ne.ext.p = map_ref(j["p"], where + ".p");
            if (ne.ext.i.rows() != ne.ext.total.dim() || ne.ext.i.cols() != ne.ext.rep.dim_m() ||
                ne.ext.p.rows() != ne.ext.rep.algebra.dim() || ne.ext.p.cols() != ne.ext.total.dim())
                throw parse_error(where + ": map dimensions inconsistent with the sequence");
            doc.extensions.emplace(it.key(), std::move(ne));
        }
    if (root.contains("crossed_modules"))
        for (auto it = root["crossed_modules"].begin(); it != root["crossed_modules"].end(); ++it) {
            std::string where = "crossed_modules." + it.key();
            const json& j = *it;
            expect_keys(j, where, {"m", "a", "mu", "action"});
            auto ait = doc.actions.find(j["action"].get<std::string>());
            if (ait == doc.actions.end()) throw parse_error(where + ": unresolved action");
            typename Document<K>::NamedCrossedModule nc;
            nc.m = j["m"].get<std::string>();
            nc.a = j["a"].get<std::string>();
            nc.mu = j["mu"].get<std::string>();
            nc.action = j["action"].get<std::string>();
            nc.cm.m = algebra_ref(j["m"], where + ".m");
            nc.cm.a = algebra_ref(j["a"], where + ".a");
            nc.cm.mu = map_ref(j["mu"], where + ".mu");
            nc.cm.act = ait->second.act;
            if (nc.cm.mu.rows() != nc.cm.a.dim() || nc.cm.mu.cols() != nc.cm.m.dim() ||
                ait->second.algebra != nc.a || ait->second.module != nc.m)
                throw parse_error(where + ": dimensions or action references inconsistent");
            doc.crossed_modules.emplace(it.key(), std::move(nc));
        }
    if (root.contains("crossed_extensions"))
        for (auto it = root["crossed_extensions"].begin(); it != root["crossed_extensions"].end();
             ++it) {
            std::string where = "crossed_extensions." + it.key();
            const json& j = *it;
            expect_keys(j, where, {"representation", "module", "sigma", "pi"});
            auto rit = doc.representations.find(j["representation"].get<std::string>());
            if (rit == doc.representations.end())
                throw parse_error(where + ": unresolved representation");
            auto mit = doc.crossed_modules.find(j["module"].get<std::string>());
            if (mit == doc.crossed_modules.end())
                throw parse_error(where + ": unresolved crossed module");
            typename Document<K>::NamedCrossedExtension nce;
            nce.representation = j["representation"].get<std::string>();
            nce.module = j["module"].get<std::string>();
            nce.sigma = j["sigma"].get<std::string>();
            nce.pi = j["pi"].get<std::string>();
            nce.ce.rep = rit->second;
            nce.ce.cm = mit->second.cm;
            nce.ce.sigma = map_ref(j["sigma"], where + ".sigma");
            nce.ce.pi = map_ref(j["pi"], where + ".pi");
            if (nce.ce.sigma.rows() != nce.ce.cm.m.dim() ||
                nce.ce.sigma.cols() != nce.ce.rep.dim_m() ||
                nce.ce.pi.rows() != nce.ce.rep.algebra.dim() ||
                nce.ce.pi.cols() != nce.ce.cm.a.dim())
                throw parse_error(where + ": map dimensions inconsistent with the sequence");
            doc.crossed_extensions.emplace(it.key(), std::move(nce));
        }
    if (root.contains("cochains"))
        for (auto it = root["cochains"].begin(); it != root["cochains"].end(); ++it) {
            std::string where = "cochains." + it.key();
            const json& j = *it;
            expect_keys(j, where, {"representation", "degree", "f", "g"});
            auto rit = doc.representations.find(j["representation"].get<std::string>());
            if (rit == doc.representations.end())
                throw parse_error(where + ": unresolved representation");
            int deg = j["degree"].get<int>();
            if (deg < 0 || deg > 1) throw parse_error(where + ".degree: supported degrees are 0 and 1");
            std::size_t na = rit->second.algebra.dim(), nm = rit->second.dim_m();
            typename Document<K>::NamedCochain nz;
            nz.representation = j["representation"].get<std::string>();
            nz.degree = deg;
            std::size_t arity = static_cast<std::size_t>(deg) + 2;
            Cochain<K> f(arity, na, nm), g(arity, na, nm);
            // flattened tensors: slot indices then the M index, all 1-based
            auto fill = [&](Cochain<K>& c, const json& arr, const std::string& at) {
                if (!arr.is_array()) throw parse_error(at + ": expected an array of entries");
                for (std::size_t e = 0; e < arr.size(); ++e) {
                    const json& entry = arr[e];
                    std::string loc = at + "[" + std::to_string(e) + "]";
                    if (!entry.is_array() || entry.size() != arity + 2)
                        throw parse_error(loc + ": expected " + std::to_string(arity) +
                                          " slot indices, an M index and a coefficient");
                    std::vector<std::size_t> digits(arity);
                    for (std::size_t q = 0; q < arity; ++q) {
                        std::size_t v = entry[q].get<std::size_t>();
                        if (v < 1 || v > na) throw parse_error(loc + ": slot index out of range");
                        digits[q] = v - 1;
                    }
                    std::size_t mk = entry[arity].get<std::size_t>();
                    if (mk < 1 || mk > nm) throw parse_error(loc + ": M index out of range");
                    c.at(c.flatten(digits), mk - 1) = detail::parse_scalar<K>(entry[arity + 1], loc);
                }
            };
            fill(f, j["f"], where + ".f");
            fill(g, j["g"], where + ".g");
            nz.z = KCochain<K>::pair(deg, std::move(f), std::move(g));
            doc.cochains.emplace(it.key(), std::move(nz));
        }
    return doc;
}

/// Parse from text; field_override, when nonempty, replaces the document's
/// field declaration (scalar literals must parse in the active field).
template <Field K>
Document<K> parse_document_text(const std::string& text, const std::string& field_override = "") {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw parse_error("syntax error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + e.what());
    }
    if (!root.is_object() || !root.contains("field") || !root["field"].is_string())
        throw parse_error("document: missing \"field\"");
    std::string field =
        field_override.empty() ? root["field"].get<std::string>() : field_override;
    if constexpr (std::is_same_v<K, Q>) {
        if (field != "Q") throw parse_error("document field is " + field + ", expected Q");
    } else {
        if (field != "Fp:" + std::to_string(Fp::modulus()))
            throw parse_error("document field is " + field + ", active field is Fp:" +
                              std::to_string(Fp::modulus()));
    }
    Document<K> doc = parse_document<K>(root);
    doc.field_spec = field;
    return doc;
}

// --- canonical serialization --------------------------------------------

namespace detail {

template <Field K>
json tensor_json(const Trilinear<K>& t) {
    json arr = json::array();
    for (std::size_t i = 0; i < t.n1(); ++i)
        for (std::size_t j = 0; j < t.n2(); ++j)
            for (std::size_t k = 0; k < t.n3(); ++k)
                if (!t.at(i, j, k).is_zero())
                    arr.push_back(json::array({i + 1, j + 1, k + 1, t.at(i, j, k).str()}));
    return arr;
}

template <Field K>
json map_json(const Matrix<K>& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                entries.push_back(json::array({i + 1, j + 1, m(i, j).str()}));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

template <Field K>
json cochain_json(const Cochain<K>& c) {
    json arr = json::array();
    std::vector<std::size_t> digits(c.arity);
    for (std::size_t ti = 0; ti < c.tuple_count(); ++ti) {
        awb::detail::decompose(ti, c.dim_a, digits);
        for (std::size_t k = 0; k < c.dim_m; ++k)
            if (!c.at(ti, k).is_zero()) {
                json entry = json::array();
                for (std::size_t d : digits) entry.push_back(d + 1);
                entry.push_back(k + 1);
                entry.push_back(c.at(ti, k).str());
                arr.push_back(entry);
            }
    }
    return arr;
}

}  // namespace detail

/// Canonical form: keys sorted (json objects are ordered maps), entries in
/// lexicographic index order, zero entries omitted, scalars in canonical
/// fraction strings. parse(serialize(d)) == d bit-exactly.
template <Field K>
std::string serialize_document(const Document<K>& doc) {
    json root;
    root["field"] = doc.field_spec;
    if (!doc.algebras.empty()) {
        json out;
        for (const auto& [name, a] : doc.algebras)
            out[name] = json{{"dim", a.dim()},
                             {"labels", a.labels},
                             {"product", detail::tensor_json(a.product)},
                             {"bracket", detail::tensor_json(a.bracket)}};
        root["algebras"] = out;
    }
    if (!doc.maps.empty()) {
        json out;
        for (const auto& [name, m] : doc.maps) out[name] = detail::map_json(m);
        root["maps"] = out;
    }
    if (!doc.representations.empty()) {
        json out;
        for (const auto& [name, r] : doc.representations) {
            std::string alg;
            for (const auto& [an, a] : doc.algebras)
                if (a == r.algebra) { alg = an; break; }
            out[name] = json{{"algebra", alg},
                             {"dim", r.dim_m()},
                             {"left", detail::tensor_json(r.act.left)},
                             {"right", detail::tensor_json(r.act.right)},
                             {"blift", detail::tensor_json(r.act.blift)},
                             {"bright", detail::tensor_json(r.act.bright)}};
        }
        root["representations"] = out;
    }
    if (!doc.actions.empty()) {
        json out;
        for (const auto& [name, na] : doc.actions)
            out[name] = json{{"algebra", na.algebra},
                             {"module", na.module},
                             {"left", detail::tensor_json(na.act.left)},
                             {"right", detail::tensor_json(na.act.right)},
                             {"blift", detail::tensor_json(na.act.blift)},
                             {"bright", detail::tensor_json(na.act.bright)}};
        root["actions"] = out;
    }
    if (!doc.extensions.empty()) {
        json out;
        for (const auto& [name, e] : doc.extensions)
            out[name] = json{{"representation", e.representation},
                             {"total", e.total},
                             {"i", e.i},
                             {"p", e.p}};
        root["extensions"] = out;
    }
    if (!doc.crossed_modules.empty()) {
        json out;
        for (const auto& [name, c] : doc.crossed_modules)
            out[name] = json{{"m", c.m}, {"a", c.a}, {"mu", c.mu}, {"action", c.action}};
        root["crossed_modules"] = out;
    }
    if (!doc.crossed_extensions.empty()) {
        json out;
        for (const auto& [name, c] : doc.crossed_extensions)
            out[name] = json{{"representation", c.representation},
                             {"module", c.module},
                             {"sigma", c.sigma},
                             {"pi", c.pi}};
        root["crossed_extensions"] = out;
    }
    if (!doc.cochains.empty()) {
        json out;
        for (const auto& [name, c] : doc.cochains)
            out[name] = json{{"representation", c.representation},
                             {"degree", c.degree},
                             {"f", detail::cochain_json(c.z.f)},
                             {"g", detail::cochain_json(c.z.g)}};
        root["cochains"] = out;
    }
    return root.dump(2) + "\n";
}

}  // namespace awb::io
