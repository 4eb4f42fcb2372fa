#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "detmor/ar.hpp"
#include "detmor/category.hpp"
#include "detmor/determined.hpp"
#include "detmor/ff.hpp"
#include "detmor/quiver.hpp"
#include "detmor/tube.hpp"
#include "detmor/verify.hpp"

// JSON-report command line front end. Exit codes: 0 success, 1 mathematical
// counterexample, 2 input error, 3 bound or enumeration limit exceeded.

using json = nlohmann::ordered_json;
using namespace detmor;

namespace {

constexpr const char* kVersion = "0.1.0";

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

FFMatrix parse_matrix(const json& j, uint32_t p, size_t rows, size_t cols) {
    if (!j.is_array() || j.size() != rows)
        throw InputError("matrix has wrong row count");
    FFMatrix m(p, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw InputError("matrix has wrong column count");
        for (size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_number_unsigned())
                throw InputError("matrix entries must be nonnegative integers");
            m.set(i, c, j[i][c].get<uint64_t>() % p);
        }
    }
    return m;
}

json matrix_json(const FFMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c));
        rows.push_back(row);
    }
    return rows;
}

json subspace_json(const Subspace& s) {
    return matrix_json(s.basis());
}

struct Instance {
    std::string kind;
    uint32_t p = 2;
    quiver::QuiverPtr q;
    std::map<std::string, tube::NilpotentPair> tube_objects;
    std::map<std::string, tube::TubeMorphism> tube_morphisms;
    std::map<std::string, quiver::Representation> quiver_objects;
    std::map<std::string, quiver::RepMorphism> quiver_morphisms;
    std::string canonical;  // serialized form used for the digest
};

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("instance parse error: ") + e.what());
    }
    Instance inst;
    try {
        inst.kind = j.at("kind").get<std::string>();
        inst.p = j.at("field").get<uint32_t>();
    } catch (const json::exception& e) {
        throw InputError(std::string("instance: ") + e.what());
    }
    if (!is_prime(inst.p)) throw InputError("field must be a prime");
    if (inst.kind != "tube" && inst.kind != "quiver")
        throw InputError("kind must be \"tube\" or \"quiver\"");
    try {
        if (inst.kind == "quiver") {
            size_t nv = j.at("vertices").get<size_t>();
            std::vector<std::pair<size_t, size_t>> arrows;
            for (const auto& a : j.at("arrows"))
                arrows.push_back({a.at(0).get<size_t>(), a.at(1).get<size_t>()});
            inst.q = std::make_shared<const quiver::Quiver>(nv, arrows);
            const json qobjs = j.value("objects", json::object());
            for (const auto& [name, spec] : qobjs.items()) {
                std::vector<size_t> dims = spec.at("dims").get<std::vector<size_t>>();
                if (dims.size() != nv) throw InputError("dims length mismatch");
                std::vector<FFMatrix> maps;
                const json& jm = spec.at("maps");
                if (jm.size() != arrows.size())
                    throw InputError("maps length must match arrow count");
                for (size_t a = 0; a < arrows.size(); ++a)
                    maps.push_back(parse_matrix(jm[a], inst.p,
                                                dims[arrows[a].second],
                                                dims[arrows[a].first]));
                inst.quiver_objects.emplace(
                    name, quiver::Representation(inst.q, inst.p, dims, maps));
            }
            const json qmors = j.value("morphisms", json::object());
            for (const auto& [name, spec] : qmors.items()) {
                auto src = inst.quiver_objects.find(spec.at("source").get<std::string>());
                auto tgt = inst.quiver_objects.find(spec.at("target").get<std::string>());
                if (src == inst.quiver_objects.end() || tgt == inst.quiver_objects.end())
                    throw InputError("morphism endpoints must name objects");
                std::vector<FFMatrix> maps;
                const json& jm = spec.at("maps");
                if (jm.size() != nv) throw InputError("morphism needs one map per vertex");
                for (size_t v = 0; v < nv; ++v)
                    maps.push_back(parse_matrix(jm[v], inst.p,
                                                tgt->second.dims[v],
                                                src->second.dims[v]));
                inst.quiver_morphisms.emplace(
                    name, quiver::RepMorphism(src->second, tgt->second, maps));
            }
        } else {
            const json tobjs = j.value("objects", json::object());
            for (const auto& [name, spec] : tobjs.items()) {
                if (spec.contains("partition")) {
                    auto parts = spec.at("partition").get<std::vector<size_t>>();
                    inst.tube_objects.emplace(name,
                                              tube::jordan_object(inst.p, parts));
                } else {
                    const json& jm = spec.at("matrix");
                    size_t n = jm.size();
                    tube::NilpotentPair x{inst.p, parse_matrix(jm, inst.p, n, n)};
                    if (!tube::is_nilpotent(x))
                        throw InputError("object matrix is not nilpotent");
                    inst.tube_objects.emplace(name, x);
                }
            }
            const json tmors = j.value("morphisms", json::object());
            for (const auto& [name, spec] : tmors.items()) {
                auto src = inst.tube_objects.find(spec.at("source").get<std::string>());
                auto tgt = inst.tube_objects.find(spec.at("target").get<std::string>());
                if (src == inst.tube_objects.end() || tgt == inst.tube_objects.end())
                    throw InputError("morphism endpoints must name objects");
                FFMatrix m = parse_matrix(spec.at("matrix"), inst.p,
                                          tgt->second.dim(), src->second.dim());
                inst.tube_morphisms.emplace(
                    name, tube::TubeMorphism(src->second, tgt->second, m));
            }
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("instance: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("instance validation: ") + e.what());
    }
    inst.canonical = json::parse(text).dump();
    return inst;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const tube::NilpotentPair& tube_obj(const Instance& inst, const std::string& name) {
    auto it = inst.tube_objects.find(name);
    if (it == inst.tube_objects.end()) throw InputError("unknown object: " + name);
    return it->second;
}
const quiver::Representation& quiver_obj(const Instance& inst,
                                         const std::string& name) {
    auto it = inst.quiver_objects.find(name);
    if (it == inst.quiver_objects.end()) throw InputError("unknown object: " + name);
    return it->second;
}
const tube::TubeMorphism& tube_mor(const Instance& inst, const std::string& name) {
    auto it = inst.tube_morphisms.find(name);
    if (it == inst.tube_morphisms.end())
        throw InputError("unknown morphism: " + name);
    return it->second;
}
const quiver::RepMorphism& quiver_mor(const Instance& inst,
                                      const std::string& name) {
    auto it = inst.quiver_morphisms.find(name);
    if (it == inst.quiver_morphisms.end())
        throw InputError("unknown morphism: " + name);
    return it->second;
}

json tube_mor_json(const tube::TubeMorphism& f) {
    return {{"source_type", tube::jordan_type(f.source)},
            {"target_type", tube::jordan_type(f.target)},
            {"matrix", matrix_json(f.f)}};
}

json quiver_mor_json(const quiver::RepMorphism& f) {
    json maps = json::array();
    for (const auto& m : f.maps) maps.push_back(matrix_json(m));
    return {{"source_dims", f.source.dims},
            {"target_dims", f.target.dims},
            {"maps", maps}};
}

json tube_obj_json(const tube::NilpotentPair& x) {
    return {{"partition", tube::jordan_type(x)}, {"matrix", matrix_json(x.n)}};
}

json quiver_obj_json(const quiver::Representation& m) {
    json maps = json::array();
    for (const auto& a : m.arrow_maps) maps.push_back(matrix_json(a));
    return {{"dims", m.dims}, {"maps", maps}};
}

struct Options {
    std::string input;
    size_t bound = 0;  // 0 = default policy
    size_t limit = 1u << 20;
    uint64_t seed = 1;
    bool tsv = false;
    bool quiet = false;
    bool timing = false;
};

// exit code carried through the report plumbing
struct Outcome {
    json payload;
    int code = 0;
};

void emit(const std::string& command, const Instance* inst, const Options& opt,
          const Outcome& out,
          std::chrono::steady_clock::time_point start) {
    json report;
    report["command"] = command;
    report["version"] = kVersion;
    report["instance_digest"] =
        inst ? std::to_string(fnv1a(inst->canonical)) : "none";
    report["result"] = out.payload;
    if (opt.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        report["wall_clock_ms"] = ms;
    }
    if (!opt.quiet) std::cout << report.dump(2) << "\n";
}

size_t default_bound(size_t dx, size_t dy, size_t dc) {
    return dx + dy + dc + 1;
}

template <class Cat>
json verdict_json(const Cat& cat, const Verdict<Cat>& v, bool exhaustive) {
    json out;
    out["verdict"] = v.holds ? (exhaustive ? "true" : "true-up-to-bound")
                             : "false";
    out["bound"] = v.bound;
    out["checks_performed"] = v.objects_checked;
    if (v.witness) {
        out["witness"] = {{"source_label", cat.label(cat.source(*v.witness))}};
        json flat = json::array();
        for (uint32_t x : cat.flatten(*v.witness)) flat.push_back(x);
        out["witness"]["flat"] = flat;
    }
    return out;
}

template <class Cat>
json table_json(const Cat& cat, const BijectionTable<Cat>& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json flat = json::array();
        for (uint32_t x : cat.flatten(row.rep)) flat.push_back(x);
        rows.push_back({{"carrier", subspace_json(row.h)},
                        {"dim", row.h.dim()},
                        {"source_label", cat.label(cat.source(row.rep))},
                        {"representative_flat", flat},
                        {"minimal_certified", row.certified}});
    }
    return {{"hom_dim", table.gm.hom_cy.size()},
            {"rows", rows},
            {"distinct_classes", table.distinct_classes}};
}

template <class Cat>
std::string table_tsv(const Cat& cat, const BijectionTable<Cat>& table) {
    std::ostringstream os;
    os << "dim\tcarrier\tsource\tcertified\n";
    for (const auto& row : table.rows)
        os << row.h.dim() << "\t" << row.h.basis().to_string() << "\t"
           << cat.label(cat.source(row.rep)) << "\t" << row.certified << "\n";
    return os.str();
}

Outcome cmd_hom(const Instance& inst, const std::string& m, const std::string& n) {
    Outcome out;
    if (inst.kind == "tube") {
        auto basis = tube::hom_basis(tube_obj(inst, m), tube_obj(inst, n));
        out.payload["dim"] = basis.size();
        json b = json::array();
        for (const auto& f : basis) b.push_back(matrix_json(f.f));
        out.payload["basis"] = b;
    } else {
        auto basis = quiver::hom_basis(quiver_obj(inst, m), quiver_obj(inst, n));
        out.payload["dim"] = basis.size();
        json b = json::array();
        for (const auto& f : basis) {
            json maps = json::array();
            for (const auto& mm : f.maps) maps.push_back(matrix_json(mm));
            b.push_back(maps);
        }
        out.payload["basis"] = b;
    }
    return out;
}

Outcome cmd_kernel(const Instance& inst, const std::string& f) {
    Outcome out;
    if (inst.kind == "tube") {
        auto k = tube::kernel(tube_mor(inst, f));
        out.payload["object"] = tube_obj_json(k.obj);
        out.payload["inclusion"] = tube_mor_json(k.incl);
    } else {
        auto k = quiver::kernel(quiver_mor(inst, f));
        out.payload["object"] = quiver_obj_json(k.obj);
        out.payload["inclusion"] = quiver_mor_json(k.incl);
    }
    return out;
}

Outcome cmd_ext(const Instance& inst, const std::string& x, const std::string& y) {
    Outcome out;
    if (inst.kind == "tube") {
        auto ext = tube::ext1(tube_obj(inst, x), tube_obj(inst, y));
        out.payload["dim"] = ext.dim;
        json c = json::array();
        for (const auto& phi : ext.cocycles) c.push_back(matrix_json(phi));
        out.payload["cocycles"] = c;
    } else {
        auto ext = ar::ext1(quiver_obj(inst, x), quiver_obj(inst, y));
        out.payload["dim"] = ext.dim;
        json c = json::array();
        for (const auto& phi : ext.cocycles) c.push_back(quiver_mor_json(phi));
        out.payload["cocycles"] = c;
    }
    return out;
}

Outcome cmd_tau(const Instance& inst, const std::string& m, bool inverse) {
    Outcome out;
    if (inst.kind == "tube") {
        // the translation is the identity here
        out.payload["object"] = tube_obj_json(tube_obj(inst, m));
        out.payload["identity_translation"] = true;
    } else {
        const auto& rep = quiver_obj(inst, m);
        auto t = inverse ? ar::tau_inverse(rep) : ar::tau(rep);
        out.payload["object"] = quiver_obj_json(t);
    }
    return out;
}

Outcome cmd_decompose(const Instance& inst, const std::string& m) {
    Outcome out;
    json parts = json::array();
    if (inst.kind == "tube") {
        auto type = tube::jordan_type(tube_obj(inst, m));
        for (size_t l : type) parts.push_back({{"partition", {l}}});
    } else {
        for (const auto& [rep, mult] :
             quiver::decompose_multiplicities(quiver_obj(inst, m)))
            parts.push_back(
                {{"object", quiver_obj_json(rep)}, {"multiplicity", mult}});
    }
    out.payload["parts"] = parts;
    return out;
}

template <class Cat>
Outcome determined_outcome(const Cat& cat, const typename Cat::Mor& alpha,
                           const typename Cat::Obj& c, size_t bound,
                           bool exhaustive) {
    auto v = is_right_determined(cat, alpha, c, bound);
    Outcome out;
    out.payload = verdict_json(cat, v, exhaustive);
    out.code = v.holds ? 0 : 1;
    return out;
}

Outcome cmd_determined(const Instance& inst, const std::string& alpha,
                       const std::string& c, const std::string& side,
                       size_t bound) {
    if (inst.kind == "tube") {
        TubeCat cat{inst.p};
        const auto& f = tube_mor(inst, alpha);
        const auto& cobj = tube_obj(inst, c);
        if (!bound)
            bound = default_bound(f.source.dim(), f.target.dim(),
                                  cobj.dim() ? tube::jordan_type(cobj)[0] : 0);
        if (side == "left") {
            OpCat<TubeCat> op{cat};
            return determined_outcome(op, OpCat<TubeCat>::Mor{f}, cobj, bound,
                                      false);
        }
        return determined_outcome(cat, f, cobj, bound, false);
    }
    QuiverCat cat{inst.q, inst.p};
    const auto& f = quiver_mor(inst, alpha);
    const auto& cobj = quiver_obj(inst, c);
    if (!bound)
        bound = default_bound(f.source.total_dim(), f.target.total_dim(),
                              cobj.total_dim());
    bool exhaustive =
        quiver::is_type_a(*inst.q) && bound >= inst.q->n_vertices;
    if (side == "left") {
        OpCat<QuiverCat> op{cat};
        return determined_outcome(op, OpCat<QuiverCat>::Mor{f}, cobj, bound,
                                  exhaustive);
    }
    return determined_outcome(cat, f, cobj, bound, exhaustive);
}

template <class Cat>
Outcome represent_outcome(const Cat& cat, const typename Cat::Obj& c,
                          const typename Cat::Obj& y, const json& carrier,
                          size_t bound) {
    auto gm = gamma_module(cat, c, y);
    const size_t d = gm.hom_cy.size();
    Subspace h(cat.modulus(), d);
    if (!carrier.is_null() && !carrier.empty()) {
        FFMatrix rows = parse_matrix(carrier, cat.modulus(), carrier.size(), d);
        h = Subspace::from_spanning_rows(rows);
    }
    auto alpha = represent_pair(cat, gm, h, bound);
    auto min = right_minimize(cat, alpha);
    Outcome out;
    out.payload["carrier"] = subspace_json(h);
    out.payload["source_label"] = cat.label(cat.source(min.morphism));
    json flat = json::array();
    for (uint32_t x : cat.flatten(min.morphism)) flat.push_back(x);
    out.payload["representative_flat"] = flat;
    out.payload["minimal_certified"] = min.certified;
    out.payload["bound"] = bound;
    return out;
}

Outcome cmd_represent(const Instance& inst, const std::string& c,
                      const std::string& y, const std::string& carrier_text,
                      size_t bound) {
    json carrier = carrier_text.empty() ? json() : json::parse(carrier_text);
    if (inst.kind == "tube") {
        TubeCat cat{inst.p};
        const auto& cobj = tube_obj(inst, c);
        const auto& yobj = tube_obj(inst, y);
        if (!bound) bound = cobj.dim() + yobj.dim() + 1;
        return represent_outcome(cat, cobj, yobj, carrier, bound);
    }
    QuiverCat cat{inst.q, inst.p};
    const auto& cobj = quiver_obj(inst, c);
    const auto& yobj = quiver_obj(inst, y);
    if (!bound) bound = cobj.total_dim() + yobj.total_dim() + 1;
    return represent_outcome(cat, cobj, yobj, carrier, bound);
}

Outcome cmd_minimize(const Instance& inst, const std::string& alpha) {
    Outcome out;
    if (inst.kind == "tube") {
        TubeCat cat{inst.p};
        auto min = right_minimize(cat, tube_mor(inst, alpha));
        out.payload["morphism"] = tube_mor_json(min.morphism);
        out.payload["minimal_certified"] = min.certified;
        out.payload["dropped_dim"] = min.dropped;
    } else {
        QuiverCat cat{inst.q, inst.p};
        auto min = right_minimize(cat, quiver_mor(inst, alpha));
        out.payload["morphism"] = quiver_mor_json(min.morphism);
        out.payload["minimal_certified"] = min.certified;
        out.payload["dropped_dim"] = min.dropped;
    }
    return out;
}

Outcome cmd_table(const Instance& inst, const std::string& c,
                  const std::string& y, size_t bound, size_t limit, bool tsv) {
    Outcome out;
    if (inst.kind == "tube") {
        TubeCat cat{inst.p};
        const auto& cobj = tube_obj(inst, c);
        const auto& yobj = tube_obj(inst, y);
        if (!bound) bound = cobj.dim() + yobj.dim() + 1;
        auto table = auslander_table(cat, cobj, yobj, bound, limit);
        out.payload = table_json(cat, table);
        if (tsv) out.payload["tsv"] = table_tsv(cat, table);
        out.code = table.distinct_classes ? 0 : 1;
    } else {
        QuiverCat cat{inst.q, inst.p};
        const auto& cobj = quiver_obj(inst, c);
        const auto& yobj = quiver_obj(inst, y);
        if (!bound) bound = cobj.total_dim() + yobj.total_dim() + 1;
        auto table = auslander_table(cat, cobj, yobj, bound, limit);
        out.payload = table_json(cat, table);
        if (tsv) out.payload["tsv"] = table_tsv(cat, table);
        out.code = table.distinct_classes ? 0 : 1;
    }
    return out;
}

Outcome cmd_almost_split(const Instance& inst, const std::string& y,
                         size_t bound) {
    Outcome out;
    if (inst.kind == "tube") {
        const auto& yobj = tube_obj(inst, y);
        auto type = tube::jordan_type(yobj);
        if (type.size() != 1)
            throw InputError("almost-split needs an indecomposable target");
        auto s = tube::almost_split_sequence(inst.p, type[0]);
        out.payload["left"] = tube_obj_json(s.left);
        out.payload["middle"] = tube_obj_json(s.middle);
        out.payload["right"] = tube_obj_json(s.right);
        out.payload["inclusion"] = tube_mor_json(s.incl);
        out.payload["projection"] = tube_mor_json(s.proj);
    } else {
        const auto& yobj = quiver_obj(inst, y);
        if (!bound) bound = yobj.total_dim() + inst.q->n_vertices + 1;
        auto s = ar::almost_split_ending_at(yobj, bound);
        out.payload["left"] = quiver_obj_json(s.left);
        out.payload["middle"] = quiver_obj_json(s.middle);
        out.payload["right"] = quiver_obj_json(s.right);
        out.payload["inclusion"] = quiver_mor_json(s.incl);
        out.payload["projection"] = quiver_mor_json(s.proj);
    }
    return out;
}

Outcome cmd_serre_pairing(const Instance& inst, const std::string& x,
                          const std::string& y) {
    if (inst.kind != "tube")
        throw InputError("serre-pairing is defined on tube instances");
    const auto& xobj = tube_obj(inst, x);
    const auto& yobj = tube_obj(inst, y);
    auto ext = tube::ext1(xobj, yobj);
    auto homyx = tube::hom_basis(yobj, xobj);
    std::vector<FFVec> rows;
    for (const auto& phi : ext.cocycles) {
        FFVec row;
        for (const auto& f : homyx) row.push_back(tube::serre_pairing(phi, f));
        rows.push_back(row);
    }
    FFMatrix gram = FFMatrix::from_rows(inst.p, homyx.size(), rows);
    Outcome out;
    out.payload["ext_dim"] = ext.dim;
    out.payload["hom_dim"] = homyx.size();
    out.payload["gram"] = matrix_json(gram);
    out.payload["rank"] = rref(gram).rank;
    out.payload["nondegenerate"] = rref(gram).rank == ext.dim;
    out.code = out.payload["nondegenerate"].get<bool>() ? 0 : 1;
    return out;
}

Outcome cmd_verify(const std::string& suite, size_t pairs, uint64_t seed) {
    std::vector<verify::CriterionResult> results;
    if (suite == "all") {
        for (const auto& name : verify::suite_names()) {
            if (name == "equivalence-image")
                results.push_back(verify::verify_equivalence_image(pairs, seed));
            else if (name == "infrastructure")
                results.push_back(verify::verify_infrastructure(seed));
            else
                results.push_back(*verify::run_suite(name));
        }
    } else if (suite == "equivalence-image") {
        results.push_back(verify::verify_equivalence_image(pairs, seed));
    } else if (suite == "infrastructure") {
        results.push_back(verify::verify_infrastructure(seed));
    } else {
        auto r = verify::run_suite(suite);
        if (!r) throw InputError("unknown suite: " + suite);
        results.push_back(*r);
    }
    Outcome out;
    json arr = json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        arr.push_back({{"name", r.name},
                       {"pass", r.pass},
                       {"vacuous", r.vacuous},
                       {"checks", r.checks},
                       {"detail", r.detail}});
        all_pass = all_pass && r.pass;
    }
    out.payload["suites"] = arr;
    out.payload["pass"] = all_pass;
    out.code = all_pass ? 0 : 1;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational workbench for determined morphisms"};
    app.require_subcommand(1);
    Options opt;

    std::string arg_m, arg_n, arg_f, arg_alpha, arg_c, arg_y, arg_x;
    std::string arg_side = "right", arg_suite, arg_carrier;
    bool arg_inverse = false;
    size_t arg_pairs = 200;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("input", opt.input, "instance JSON path or -")
                ->required();
        sub->add_option("--bound", opt.bound, "pool/test bound (0 = default)");
        sub->add_option("--limit", opt.limit, "enumeration hard cap");
        sub->add_option("--seed", opt.seed, "seed for randomized suites");
        sub->add_flag("--tsv", opt.tsv, "include TSV rendering of tables");
        sub->add_flag("--quiet", opt.quiet, "suppress the report");
        sub->add_flag("--timing", opt.timing,
                      "include wall clock (breaks byte-identical reports)");
    };

    auto* hom = app.add_subcommand("hom", "Hom basis and dimension");
    add_common(hom, true);
    hom->add_option("M", arg_m)->required();
    hom->add_option("N", arg_n)->required();

    auto* kernel = app.add_subcommand("kernel", "kernel of a morphism");
    add_common(kernel, true);
    kernel->add_option("f", arg_f)->required();

    auto* ext = app.add_subcommand("ext", "Ext^1 dimension and cocycles");
    add_common(ext, true);
    ext->add_option("X", arg_x)->required();
    ext->add_option("Y", arg_y)->required();

    auto* tau = app.add_subcommand("tau", "translation of an object");
    add_common(tau, true);
    tau->add_option("M", arg_m)->required();
    tau->add_flag("--inverse", arg_inverse, "apply the inverse translation");

    auto* dec = app.add_subcommand("decompose", "indecomposable decomposition");
    add_common(dec, true);
    dec->add_option("M", arg_m)->required();

    auto* det = app.add_subcommand("determined", "determinedness verdict");
    add_common(det, true);
    det->add_option("alpha", arg_alpha)->required();
    det->add_option("C", arg_c)->required();
    det->add_option("--side", arg_side, "right (default) or left")
        ->check(CLI::IsMember({"right", "left"}));

    auto* rep = app.add_subcommand("represent", "represent a submodule pair");
    add_common(rep, true);
    rep->add_option("C", arg_c)->required();
    rep->add_option("Y", arg_y)->required();
    rep->add_option("--carrier", arg_carrier,
                    "JSON rows spanning the submodule (default: zero)");

    auto* min = app.add_subcommand("minimize", "right-minimize a morphism");
    add_common(min, true);
    min->add_option("alpha", arg_alpha)->required();

    auto* table = app.add_subcommand("table", "bijection table for (C, Y)");
    add_common(table, true);
    table->add_option("C", arg_c)->required();
    table->add_option("Y", arg_y)->required();

    auto* as = app.add_subcommand("almost-split", "almost split sequence at Y");
    add_common(as, true);
    as->add_option("Y", arg_y)->required();

    auto* sp = app.add_subcommand("serre-pairing", "duality pairing Gram matrix");
    add_common(sp, true);
    sp->add_option("X", arg_x)->required();
    sp->add_option("Y", arg_y)->required();

    auto* ver = app.add_subcommand("verify", "run acceptance suites");
    add_common(ver, false);
    ver->add_option("suite", arg_suite, "suite name or \"all\"")->required();
    ver->add_option("--pairs", arg_pairs, "sample pairs for equivalence-image");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        std::optional<Instance> inst;
        auto load = [&]() -> const Instance& {
            if (!inst) inst = parse_instance(read_input(opt.input));
            return *inst;
        };
        Outcome out;
        std::string command;
        if (hom->parsed()) {
            command = "hom";
            out = cmd_hom(load(), arg_m, arg_n);
        } else if (kernel->parsed()) {
            command = "kernel";
            out = cmd_kernel(load(), arg_f);
        } else if (ext->parsed()) {
            command = "ext";
            out = cmd_ext(load(), arg_x, arg_y);
        } else if (tau->parsed()) {
            command = "tau";
            out = cmd_tau(load(), arg_m, arg_inverse);
        } else if (dec->parsed()) {
            command = "decompose";
            out = cmd_decompose(load(), arg_m);
        } else if (det->parsed()) {
            command = "determined";
            out = cmd_determined(load(), arg_alpha, arg_c, arg_side, opt.bound);
        } else if (rep->parsed()) {
            command = "represent";
            out = cmd_represent(load(), arg_c, arg_y, arg_carrier, opt.bound);
        } else if (min->parsed()) {
            command = "minimize";
            out = cmd_minimize(load(), arg_alpha);
        } else if (table->parsed()) {
            command = "table";
            out = cmd_table(load(), arg_c, arg_y, opt.bound, opt.limit, opt.tsv);
        } else if (as->parsed()) {
            command = "almost-split";
            out = cmd_almost_split(load(), arg_y, opt.bound);
        } else if (sp->parsed()) {
            command = "serre-pairing";
            out = cmd_serre_pairing(load(), arg_x, arg_y);
        } else if (ver->parsed()) {
            command = "verify";
            out = cmd_verify(arg_suite, arg_pairs, opt.seed);
        }
        emit(command, inst ? &*inst : nullptr, opt, out, start);
        return out.code;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const LimitError& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        // core limits surface as runtime_error
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}
