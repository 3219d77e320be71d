#include "crystal/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <map>

#include "crystal/errors.hpp"

namespace crystal {

namespace {

Scalar read_scalar(Field f, const json& j) {
    if (!j.is_string())
        throw format_error("coefficients must be strings, got " + j.dump());
    return Scalar::parse(f, j.get<std::string>());
}

std::int64_t read_index(const json& j, std::int64_t bound,
                        const char* what) {
    if (!j.is_number_integer())
        throw format_error(std::string(what) + " index must be an integer");
    std::int64_t i = j.get<std::int64_t>();
    if (i < 0 || i >= bound)
        throw format_error(std::string(what) + " index " + std::to_string(i) +
                           " out of range [0," + std::to_string(bound) + ")");
    return i;
}

void acc_into(std::map<std::int64_t, Scalar>& m, std::int64_t k,
              const Scalar& c) {
    auto [it, inserted] = m.try_emplace(k, c);
    if (!inserted) it->second = it->second + c;
}

SparseVector from_accumulated(std::int64_t ambient,
                              const std::map<std::int64_t, Scalar>& acc) {
    SparseVector v(ambient);
    for (const auto& [i, c] : acc)
        if (!c.is_zero()) v.push(i, c);
    return v;
}

json vector_to_entries(const SparseVector& v) {
    json out = json::array();
    for (const auto& [i, c] : v.entries)
        out.push_back(json::array({i, c.to_string()}));
    return out;
}

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw format_error(std::string("missing field \"") + key + "\"");
    return *it;
}

} // namespace

json hopf_to_json(const HopfAlgebra& H) {
    json j;
    j["field"] = {{"char", H.field.characteristic}};
    j["dim"] = H.dim;
    json basis = json::array();
    for (std::int64_t i = 0; i < H.dim; ++i) basis.push_back(H.label(i));
    j["basis"] = basis;
    json mult = json::array();
    for (std::int64_t a = 0; a < H.dim; ++a)
        for (std::int64_t b = 0; b < H.dim; ++b)
            for (const auto& [k, c] : H.mult[(std::size_t)a][(std::size_t)b]
                                          .entries)
                mult.push_back(json::array({a, b, k, c.to_string()}));
    j["mult"] = mult;
    j["unit"] = vector_to_entries(H.unit);
    json comult = json::array();
    for (std::int64_t i = 0; i < H.dim; ++i)
        for (const auto& [idx, c] : H.comult[(std::size_t)i].entries)
            comult.push_back(json::array(
                {i, idx / H.dim, idx % H.dim, c.to_string()}));
    j["comult"] = comult;
    j["counit"] = vector_to_entries(H.counit);
    if (H.has_antipode()) {
        json ant = json::array();
        for (std::int64_t i = 0; i < H.dim; ++i)
            for (const auto& [k, c] :
                 H.antipode->columns[(std::size_t)i].entries)
                ant.push_back(json::array({i, k, c.to_string()}));
        j["antipode"] = ant;
    } else {
        j["antipode"] = nullptr;
    }
    return j;
}

HopfAlgebra hopf_from_json(const json& j) {
    if (!j.is_object()) throw format_error("algebra file must hold an object");
    Field f{require(require(j, "field"), "char").get<std::int64_t>()};
    std::int64_t d = require(j, "dim").get<std::int64_t>();
    if (d <= 0) throw format_error("dimension must be positive");

    HopfAlgebra H;
    H.field = f;
    H.dim = d;
    if (j.contains("basis") && !j["basis"].is_null())
        for (const auto& l : j["basis"])
            H.labels.push_back(l.get<std::string>());
    if (!H.labels.empty() && (std::int64_t)H.labels.size() != d)
        throw format_error("basis label count differs from the dimension");

    std::vector<std::vector<std::map<std::int64_t, Scalar>>> macc(
        (std::size_t)d, std::vector<std::map<std::int64_t, Scalar>>(
                            (std::size_t)d));
    for (const auto& e : require(j, "mult")) {
        if (!e.is_array() || e.size() != 4)
            throw format_error("mult entries are [i,j,k,coeff] quadruples");
        std::int64_t a = read_index(e[0], d, "mult row");
        std::int64_t b = read_index(e[1], d, "mult column");
        std::int64_t k = read_index(e[2], d, "mult target");
        acc_into(macc[(std::size_t)a][(std::size_t)b], k,
                 read_scalar(f, e[3]));
    }
    H.mult.assign((std::size_t)d,
                  std::vector<SparseVector>((std::size_t)d, SparseVector(d)));
    for (std::int64_t a = 0; a < d; ++a)
        for (std::int64_t b = 0; b < d; ++b)
            H.mult[(std::size_t)a][(std::size_t)b] =
                from_accumulated(d, macc[(std::size_t)a][(std::size_t)b]);

    std::map<std::int64_t, Scalar> uacc;
    for (const auto& e : require(j, "unit")) {
        acc_into(uacc, read_index(e.at(0), d, "unit"),
                 read_scalar(f, e.at(1)));
    }
    H.unit = from_accumulated(d, uacc);

    std::vector<std::map<std::int64_t, Scalar>> cacc((std::size_t)d);
    for (const auto& e : require(j, "comult")) {
        if (!e.is_array() || e.size() != 4)
            throw format_error("comult entries are [i,j,k,coeff] quadruples");
        std::int64_t i = read_index(e[0], d, "comult source");
        std::int64_t a = read_index(e[1], d, "comult left");
        std::int64_t b = read_index(e[2], d, "comult right");
        acc_into(cacc[(std::size_t)i], a * d + b, read_scalar(f, e[3]));
    }
    H.comult.assign((std::size_t)d, SparseVector(d * d));
    for (std::int64_t i = 0; i < d; ++i)
        H.comult[(std::size_t)i] =
            from_accumulated(d * d, cacc[(std::size_t)i]);

    std::map<std::int64_t, Scalar> eacc;
    for (const auto& e : require(j, "counit")) {
        acc_into(eacc, read_index(e.at(0), d, "counit"),
                 read_scalar(f, e.at(1)));
    }
    H.counit = from_accumulated(d, eacc);

    if (j.contains("antipode") && !j["antipode"].is_null()) {
        LinearMap S(d, d, f);
        std::vector<std::map<std::int64_t, Scalar>> sacc((std::size_t)d);
        for (const auto& e : j["antipode"]) {
            if (!e.is_array() || e.size() != 3)
                throw format_error("antipode entries are [i,j,coeff] triples");
            std::int64_t i = read_index(e[0], d, "antipode source");
            std::int64_t k = read_index(e[1], d, "antipode target");
            acc_into(sacc[(std::size_t)i], k, read_scalar(f, e[2]));
        }
        for (std::int64_t i = 0; i < d; ++i)
            S.columns[(std::size_t)i] =
                from_accumulated(d, sacc[(std::size_t)i]);
        H.antipode = std::move(S);
    }
    check_shape(H);
    return H;
}

FiniteGroup group_from_json(const json& j) {
    if (!j.is_object()) throw format_error("group file must hold an object");
    if (j.contains("table")) {
        std::vector<std::vector<int>> table;
        for (const auto& row : j["table"])
            table.push_back(row.get<std::vector<int>>());
        std::vector<std::string> labels;
        if (j.contains("labels"))
            labels = j["labels"].get<std::vector<std::string>>();
        return group_from_table(std::move(table), std::move(labels));
    }
    if (j.contains("perm_generators")) {
        std::vector<std::vector<int>> gens;
        for (const auto& g : j["perm_generators"])
            gens.push_back(g.get<std::vector<int>>());
        return group_from_permutations(gens,
                                       require(j, "degree").get<int>());
    }
    if (j.contains("family")) {
        std::string fam = j["family"].get<std::string>();
        if (fam == "trivial") return trivial_group();
        if (fam == "cyclic")
            return cyclic_group(require(j, "n").get<std::int64_t>());
        if (fam == "Zp_powers")
            return product_of_cyclic_p_powers(
                require(j, "p").get<std::uint64_t>(),
                require(j, "exponents").get<std::vector<int>>());
        if (fam == "Zp_semidirect_Zp2")
            return semidirect_p(require(j, "p").get<std::uint64_t>());
        if (fam == "dihedral")
            return dihedral_group(require(j, "n").get<int>());
        if (fam == "symmetric")
            return symmetric_group(require(j, "n").get<int>());
        if (fam == "quaternion") return quaternion_group();
        throw format_error("unknown group family \"" + fam + "\"");
    }
    throw format_error("group needs a table, perm_generators, or family");
}

PairingData pairing_from_json(const json& j, const std::string& base_dir) {
    namespace fs = std::filesystem;
    auto resolve = [&](const std::string& p) {
        fs::path q(p);
        if (q.is_relative()) q = fs::path(base_dir) / q;
        return q.string();
    };
    PairingData P;
    P.left = hopf_from_json(
        load_json_file(resolve(require(j, "left").get<std::string>())));
    P.right = hopf_from_json(
        load_json_file(resolve(require(j, "right").get<std::string>())));
    Field f = P.left.field;
    for (const auto& row : require(j, "matrix")) {
        std::vector<Scalar> r;
        for (const auto& c : row) r.push_back(read_scalar(f, c));
        P.matrix.push_back(std::move(r));
    }
    return P;
}

json subspace_to_json(const Subspace& S) {
    json rows = json::array();
    for (const auto& v : S.basis) rows.push_back(vector_to_entries(v));
    return json{{"ambient", S.ambient}, {"dim", S.dim()}, {"basis", rows}};
}

json filtration_to_json(const Filtration& F) {
    const char* kind = F.kind == FiltrationKind::epsilon_adic ? "epsilon_adic"
                       : F.kind == FiltrationKind::delta_bullet
                           ? "delta_bullet"
                       : F.kind == FiltrationKind::standard ? "standard"
                                                            : "custom";
    json bases = json::array();
    for (const auto& S : F.chain) {
        json rows = json::array();
        for (const auto& v : S.basis) rows.push_back(vector_to_entries(v));
        bases.push_back(rows);
    }
    return json{{"kind", kind},
                {"direction", F.direction == Direction::increasing
                                  ? "increasing"
                                  : "decreasing"},
                {"dims", F.dims()},
                {"stable_index", F.stable_index},
                {"bases", bases}};
}

json laurent_to_json(const LaurentModule& M) {
    json dims = json::object();
    json bases = json::object();
    for (std::int64_t z = M.zmin; z <= M.zmax; ++z) {
        const Subspace& S = M.at(z);
        json rows = json::array();
        for (const auto& v : S.basis) rows.push_back(vector_to_entries(v));
        dims[std::to_string(z)] = S.dim();
        bases[std::to_string(z)] = rows;
    }
    return json{{"window", json::array({M.zmin, M.zmax})},
                {"layer_dims", dims},
                {"low_stable_dim", M.low_stable.dim()},
                {"high_stable_dim", M.high_stable.dim()},
                {"bases", bases}};
}

json presentation_to_json(const PresentationReport& R) {
    return json{{"generator_labels", R.generator_labels},
                {"generator_degrees", R.generator_degrees},
                {"total_dim", R.total_dim},
                {"relations_verified", R.relations_verified}};
}

json lie_to_json(const RestrictedLieBialgebra& L) {
    json bracket = json::array();
    for (std::int64_t i = 0; i < L.dim; ++i)
        for (std::int64_t k = i + 1; k < L.dim; ++k)
            for (const auto& [t, c] :
                 L.bracket[(std::size_t)i][(std::size_t)k].entries)
                bracket.push_back(json::array({i, k, t, c.to_string()}));
    json pmap = nullptr;
    if (L.p_operation) {
        pmap = json::array();
        for (std::int64_t i = 0; i < L.dim; ++i)
            for (const auto& [t, c] : (*L.p_operation)[(std::size_t)i].entries)
                pmap.push_back(json::array({i, t, c.to_string()}));
    }
    json cobracket = json::array();
    for (std::int64_t i = 0; i < L.dim; ++i)
        for (const auto& [idx, c] : L.cobracket[(std::size_t)i].entries)
            cobracket.push_back(json::array(
                {i, idx / L.dim, idx % L.dim, c.to_string()}));
    return json{{"labels", L.labels},
                {"degrees", L.degrees},
                {"bracket", bracket},
                {"p_operation", pmap},
                {"cobracket", cobracket}};
}

json validation_to_json(const ValidationReport& R) {
    json checks = json::array();
    for (const auto& c : R.checks)
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"witness", c.witness}});
    return json{{"checks", checks},
                {"algebra_ok", R.algebra_ok},
                {"coalgebra_ok", R.coalgebra_ok},
                {"bialgebra_ok", R.bialgebra_ok},
                {"antipode_ok", R.antipode_ok},
                {"has_antipode", R.has_antipode},
                {"commutative", R.commutative},
                {"cocommutative", R.cocommutative},
                {"all_pass", R.all_pass()}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open \"" + path + "\"");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw format_error("parse failure in \"" + path + "\": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw format_error("cannot write \"" + path + "\"");
    out << j.dump(2) << "\n";
}

} // namespace crystal
