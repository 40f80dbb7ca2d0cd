#include "parahoric/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace parahoric::cli {

namespace {

constexpr int kSchemaVersion = 1;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

Json rat_json(const Rat& q) { return rat_str(q); }

Json qvec_json(const QVec& v) {
    Json out = Json::array();
    for (const Rat& q : v) out.push_back(rat_json(q));
    return out;
}

Json ivec_json(const IVec& v) {
    Json out = Json::array();
    for (long c : v) out.push_back(c);
    return out;
}

Json affine_json(const AffineRoot& a) {
    Json out = Json::object();
    out["vector"] = ivec_json(a.vec.coords);
    out["level"] = a.level;
    return out;
}

Json request_echo(const CommandRequest& request) {
    Json echo = Json::object();
    echo["command"] = request.command;
    if (!request.type_spec.empty()) echo["type"] = DynkinType::parse(request.type_spec).str();
    if (request.facet) echo["facet"] = *request.facet;
    if (request.facet_b) echo["facet_b"] = *request.facet_b;
    if (!request.point.empty()) {
        Json pts = Json::array();
        for (const std::string& chunk : request.point)
            for (const std::string& token : split(chunk, ','))
                if (!token.empty()) pts.push_back(rat_str(parse_rational(token)));
        echo["point"] = pts;
    }
    if (request.genus_given) echo["genus"] = request.genus;
    if (!request.ram.empty()) echo["ram"] = format_ram_spec(parse_ram_spec(request.ram));
    if (!request.sigma.empty()) echo["sigma"] = request.sigma;
    if (request.command == "verify") {
        echo["all"] = request.all;
        echo["max_rank"] = request.max_rank;
    }
    echo["format"] = request.format;
    return echo;
}

Json make_table(const CommandRequest& request) {
    Json table = Json::object();
    table["schema_version"] = kSchemaVersion;
    table["command"] = request.command;
    table["request"] = request_echo(request);
    table["rows"] = Json::array();
    table["summary"] = Json::object();
    table["falsifications"] = Json::array();
    return table;
}

RootSystem system_for(const CommandRequest& request) {
    if (request.type_spec.empty())
        throw validation_error("bad_type", "command '" + request.command + "' needs a type");
    return RootSystem(DynkinType::parse(request.type_spec));
}

Facet request_facet(const RootSystem& rs, const std::optional<std::vector<int>>& spec) {
    return facet_for(rs, spec.value_or(std::vector<int>{}));
}

std::vector<RamificationDatum> ram_data(const RootSystem& rs, const std::string& spec) {
    std::vector<RamificationDatum> out;
    for (const RamEntry& e : parse_ram_spec(spec)) {
        QVec theta = parse_point_spec(e.coords, rs.rank());
        out.push_back(RamificationDatum{e.order, make_torsion(rs, std::move(theta))});
    }
    return out;
}

std::vector<Facet> sigma_facets(const RootSystem& rs, const std::string& spec) {
    std::vector<Facet> out;
    if (spec.empty()) return out;
    for (const std::string& segment : split(spec, ';'))
        out.push_back(facet_for(rs, parse_facet_spec(segment)));
    return out;
}

void run_facets(const CommandRequest& request, Json& table) {
    const RootSystem rs = system_for(request);
    const auto facets = enumerate_facets(rs);
    for (const Facet& f : facets) {
        Json row = Json::object();
        row["vanishing"] = f.vanishing;
        row["dimension"] = f.dimension;
        row["representative"] = qvec_json(f.representative);
        table["rows"].push_back(row);
    }
    table["summary"]["count"] = facets.size();
    table["summary"]["rank"] = rs.rank();
    table["summary"]["marks"] = ivec_json(rs.marks());
}

void run_parahoric(const CommandRequest& request, Json& table) {
    const RootSystem rs = system_for(request);
    std::vector<long> exponents, prounipotent;
    if (!request.point.empty()) {
        // Theta = a single rational point of the apartment.
        if (request.facet)
            throw validation_error("bad_arguments", "give either --facet or --point, not both");
        const PointExponents data =
            parahoric_exponents_at(rs, parse_point_spec(request.point, rs.rank()));
        exponents = data.exponents;
        prounipotent = data.prounipotent;
        table["summary"]["point"] = qvec_json(data.point);
    } else {
        const Facet f = request_facet(rs, request.facet);
        const ParahoricData data = parahoric_exponents(rs, f, 2);
        exponents = data.exponents;
        prounipotent = data.prounipotent;
        table["summary"]["facet"] = f.vanishing;
    }
    for (long i = 0; i < rs.num_roots(); ++i) {
        Json row = Json::object();
        row["root"] = ivec_json(rs.root_at(i).coords);
        row["m"] = exponents[i];
        row["prounipotent"] = prounipotent[i];
        table["rows"].push_back(row);
    }
    table["summary"]["torus"] = ParahoricData::torus_part;
    table["summary"]["torus_prounipotent"] = ParahoricData::torus_part_prounipotent;
}

void run_quotient(const CommandRequest& request, Json& table) {
    const RootSystem rs = system_for(request);
    const Facet f = request_facet(rs, request.facet);
    const ReductiveQuotient q = reductive_quotient(rs, f);
    for (const AffineRoot& a : q.affine_roots) table["rows"].push_back(affine_json(a));
    Json components = Json::array();
    for (const DynkinType& t : q.subsystem.components) components.push_back(t.str());
    table["summary"]["facet"] = f.vanishing;
    table["summary"]["components"] = components;
    table["summary"]["torus_rank"] = q.torus_rank;
    table["summary"]["semisimple_dim"] = q.semisimple_dim;
    table["summary"]["group_dim"] = q.group_dim;
    table["summary"]["positive_count"] = q.positive_count;
}

void run_parabolic(const CommandRequest& request, Json& table) {
    const RootSystem rs = system_for(request);
    const Facet s = request_facet(rs, request.facet);
    const Facet b = request_facet(rs, request.facet_b);
    const ParabolicSet p = parabolic_set(rs, s, b);
    const FloorCeilingReport lemma = verify_floor_ceiling(rs, s, b);
    for (const AffineRoot& a : p.roots) {
        Json row = affine_json(a);
        const bool levi = std::find(p.levi.begin(), p.levi.end(), a) != p.levi.end();
        row["part"] = levi ? "levi" : "unipotent";
        table["rows"].push_back(row);
    }
    table["summary"]["facet_s"] = s.vanishing;
    table["summary"]["facet_b"] = b.vanishing;
    table["summary"]["levi_count"] = p.levi.size();
    table["summary"]["unipotent_count"] = p.unipotent.size();
    table["summary"]["floor_ceiling_matches"] = lemma.matches_parabolic;
    for (const std::string& f : lemma.falsifications) table["falsifications"].push_back(f);
}

void run_walk(const CommandRequest& request, Json& table) {
    const RootSystem rs = system_for(request);
    const QVec target = parse_point_spec(request.point, rs.rank());
    const AlcoveWalk walk = alcove_walk(rs, target);
    for (const AffineRoot& wall : walk.image_walls) table["rows"].push_back(affine_json(wall));
    table["summary"]["word"] = walk.word;
    table["summary"]["length"] = walk.word.size();
    table["summary"]["image_representative"] = qvec_json(walk.image_representative);
}

void run_dimension(const CommandRequest& request, Json& table) {
    const RootSystem rs = system_for(request);
    if (!request.genus_given)
        throw validation_error("bad_genus", "dimension needs --genus");
    const ModuliInput input = make_moduli_input(rs, request.genus, ram_data(rs, request.ram),
                                                sigma_facets(rs, request.sigma));
    const FuchsianReport fuchs = fuchsian_check(rs, input);
    const Rat dim = moduli_dimension(rs, input);

    for (size_t i = 0; i < input.ram.size(); ++i) {
        Json row = Json::object();
        row["point"] = i;
        row["n"] = input.ram[i].order;
        row["isotropy"] = qvec_json(input.ram[i].isotropy.theta);
        row["isotropy_order"] = input.ram[i].isotropy.order;
        row["e_g"] = e_g(rs, input.ram[i].isotropy);
        row["sigma"] = input.facets[i].vanishing;
        row["flag_dim"] = reductive_quotient(rs, input.facets[i]).positive_count;
        table["rows"].push_back(row);
    }
    table["summary"]["dim"] = to_long(dim);
    table["summary"]["dim_group"] = rs.dim_group();
    table["summary"]["genus"] = input.genus;
    table["summary"]["points"] = input.ram.size();
    table["summary"]["hecke_fiber_dim"] = hecke_fiber_dimension(rs, input);
    table["summary"]["generators"] = fuchs.generators;
    table["summary"]["euler_characteristic"] = rat_json(fuchs.euler_characteristic);
    if (dim <= 0) table["summary"]["warning"] = "nonpositive_dimension";
}

void run_codim(const CommandRequest& request, Json& table) {
    const RootSystem rs = system_for(request);
    if (!request.genus_given)
        throw validation_error("bad_genus", "codim needs --genus");
    const ModuliInput input =
        make_moduli_input(rs, request.genus, ram_data(rs, request.ram), {});
    const TorsionElement g = make_torsion(rs, parse_point_spec(request.point, rs.rank()));
    const CentralizerData data = centralizer(rs, g);
    const CodimBound bound = rs_codim_bound(rs, input, g);

    table["summary"]["k"] = bound.k;
    table["summary"]["bound"] = rat_json(bound.bound);
    table["summary"]["at_least_two"] = bound.at_least_two;
    table["summary"]["at_least_four"] = bound.at_least_four;
    table["summary"]["unstable_bound"] = unstable_codim_bound(input);
    table["summary"]["element_order"] = g.order;
    table["summary"]["e_g"] = e_g(rs, g);
    table["summary"]["dim_zg"] = data.dim_zg;
    table["summary"]["dim_zg_a"] = data.dim_zg_a;
    table["summary"]["dim_zg_s"] = data.dim_zg_s;
    table["summary"]["centralizer_components"] = components_str(data.y_g.components);
    table["summary"]["in_fundamental_alcove"] = data.in_fundamental_alcove;
    table["summary"]["claims_apply"] = data.claims_apply;
    table["summary"]["k_equals_abelian_rank"] = data.k_equals_abelian_rank;
    table["summary"]["semisimple_bound_holds"] = data.semisimple_bound_holds;
    if (data.claims_apply && (!data.k_equals_abelian_rank || !data.semisimple_bound_holds))
        table["falsifications"].push_back("centralizer claims failed inside the alcove at " +
                                          qvec_str(g.theta));
}

void run_verify_cmd(const CommandRequest& request, Json& table) {
    std::optional<DynkinType> only;
    if (!request.all) {
        if (request.type_spec.empty())
            throw validation_error("bad_type", "verify needs --all or a type");
        only = DynkinType::parse(request.type_spec);
    }
    long informational = 0;
    for (const CheckResult& check : run_verify(only, request.max_rank)) {
        Json row = Json::object();
        row["type"] = check.type;
        row["check"] = check.check;
        row["cases"] = check.cases;
        row["violations"] = check.violations;
        row["informational"] = check.informational;
        table["rows"].push_back(row);
        informational += check.informational;
        for (const std::string& f : check.falsifications) table["falsifications"].push_back(f);
    }
    table["summary"]["checks"] = table["rows"].size();
    table["summary"]["informational"] = informational;
}

}  // namespace

std::vector<int> parse_facet_spec(const std::string& spec) {
    std::vector<int> out;
    if (spec.empty()) return out;
    for (const std::string& token : split(spec, ',')) {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw validation_error("bad_facet_index", "malformed facet node '" + token + "'");
        try {
            out.push_back(std::stoi(token));
        } catch (const std::out_of_range&) {
            throw validation_error("bad_facet_index", "facet node '" + token + "' out of range");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

QVec parse_point_spec(const std::vector<std::string>& spec, int rank) {
    std::vector<std::string> tokens;
    for (const std::string& chunk : spec)
        for (const std::string& token : split(chunk, ','))
            if (!token.empty()) tokens.push_back(token);
    if (static_cast<int>(tokens.size()) != rank)
        throw validation_error("dimension_mismatch",
                               "point has " + std::to_string(tokens.size()) +
                                   " coordinates, rank is " + std::to_string(rank));
    QVec out;
    for (const std::string& token : tokens) out.push_back(parse_rational(token));
    return out;
}

std::string format_point(const QVec& point) {
    std::string out;
    for (size_t i = 0; i < point.size(); ++i) {
        if (i) out += ",";
        out += rat_str(point[i]);
    }
    return out;
}

std::vector<RamEntry> parse_ram_spec(const std::string& spec) {
    std::vector<RamEntry> out;
    if (spec.empty()) return out;
    for (const std::string& segment : split(spec, ';')) {
        const auto colon = segment.find(':');
        if (colon == std::string::npos)
            throw validation_error("bad_ram", "malformed ramification entry '" + segment +
                                                  "' (expected n:coords)");
        const std::string n_token = segment.substr(0, colon);
        if (n_token.empty() || n_token.find_first_not_of("0123456789") != std::string::npos)
            throw validation_error("bad_ram", "malformed ramification order '" + n_token + "'");
        RamEntry entry;
        try {
            entry.order = std::stol(n_token);
        } catch (const std::out_of_range&) {
            throw validation_error("bad_ram", "ramification order '" + n_token + "' out of range");
        }
        for (const std::string& token : split(segment.substr(colon + 1), ','))
            entry.coords.push_back(rat_str(parse_rational(token)));
        out.push_back(entry);
    }
    return out;
}

std::string format_ram_spec(const std::vector<RamEntry>& entries) {
    std::string out;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ";";
        out += std::to_string(entries[i].order) + ":";
        for (size_t j = 0; j < entries[i].coords.size(); ++j) {
            if (j) out += ",";
            out += entries[i].coords[j];
        }
    }
    return out;
}

RunResult run(const CommandRequest& request) {
    if (request.format != "json" && request.format != "tsv")
        throw validation_error("bad_format", "unknown output format '" + request.format + "'");
    RunResult result;
    result.table = make_table(request);

    if (request.command == "facets")
        run_facets(request, result.table);
    else if (request.command == "parahoric")
        run_parahoric(request, result.table);
    else if (request.command == "quotient")
        run_quotient(request, result.table);
    else if (request.command == "parabolic")
        run_parabolic(request, result.table);
    else if (request.command == "walk")
        run_walk(request, result.table);
    else if (request.command == "dimension")
        run_dimension(request, result.table);
    else if (request.command == "codim")
        run_codim(request, result.table);
    else if (request.command == "verify")
        run_verify_cmd(request, result.table);
    else
        throw validation_error("bad_command", "unknown command '" + request.command + "'");

    result.exit_code = result.table["falsifications"].empty() ? 0 : 2;
    return result;
}

std::string render(const Json& table, const std::string& format) {
    if (format == "json") return table.dump(2) + "\n";

    std::ostringstream out;
    for (const auto& [key, value] : table["summary"].items())
        out << "# " << key << "\t" << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
    const auto& rows = table["rows"];
    if (!rows.empty()) {
        bool first = true;
        for (const auto& [key, value] : rows.front().items()) {
            out << (first ? "" : "\t") << key;
            first = false;
        }
        out << "\n";
        for (const auto& row : rows) {
            first = true;
            for (const auto& [key, value] : row.items()) {
                out << (first ? "" : "\t");
                first = false;
                if (value.is_string())
                    out << value.get<std::string>();
                else if (value.is_array()) {
                    for (size_t i = 0; i < value.size(); ++i)
                        out << (i ? "," : "")
                            << (value[i].is_string() ? value[i].get<std::string>()
                                                     : value[i].dump());
                } else
                    out << value.dump();
            }
            out << "\n";
        }
    }
    for (const auto& f : table["falsifications"])
        out << "! " << f.get<std::string>() << "\n";
    return out.str();
}

int main_impl(const std::vector<std::string>& args) {
    CLI::App app{"Local data of parahoric group schemes and invariants of their torsor moduli",
                 "parahoric"};
    app.footer("Sweeps are deterministic; the BT_SEED environment variable is reserved and "
               "currently ignored.");
    app.require_subcommand(1);

    CommandRequest request;
    std::string positional_type;
    std::string type_flag;
    std::string facet_spec;
    bool facet_given = false;
    std::string facet_b_spec;
    bool facet_b_given = false;

    auto add_common = [&](CLI::App* cmd, bool with_type) {
        if (with_type) {
            cmd->add_option("TYPE", positional_type, "Dynkin type, e.g. A2, C3, G2");
            cmd->add_option("--type", type_flag, "Dynkin type (alternative to the positional)");
        }
        cmd->add_option("--format", request.format, "json or tsv")->default_str("json");
        cmd->add_option("--out", request.out, "write the table to this path instead of stdout");
    };

    CLI::App* facets = app.add_subcommand("facets", "facets of the closed fundamental alcove");
    add_common(facets, true);

    CLI::App* parah = app.add_subcommand("parahoric", "filtration exponents m_r at a facet");
    add_common(parah, true);
    parah->add_option("--facet", facet_spec, "vanishing node indices, e.g. 0,2")
        ->each([&](const std::string&) { facet_given = true; });
    parah->add_option("--point", request.point,
                      "evaluate at a single apartment point instead of a facet");

    CLI::App* quot = app.add_subcommand("quotient", "reductive quotient of the special fiber");
    add_common(quot, true);
    quot->add_option("--facet", facet_spec, "vanishing node indices")
        ->each([&](const std::string&) { facet_given = true; });

    CLI::App* parab = app.add_subcommand("parabolic", "parabolic set G_{s,b} of a closure pair");
    add_common(parab, true);
    parab->add_option("--facet", facet_spec, "facet s (must be in the closure of b)")
        ->each([&](const std::string&) { facet_given = true; });
    parab->add_option("--facet-b", facet_b_spec, "facet b (default: the open alcove)")
        ->each([&](const std::string&) { facet_b_given = true; });

    CLI::App* walk = app.add_subcommand("walk", "affine Weyl word mapping a_0 to a point's alcove");
    add_common(walk, true);
    walk->add_option("--point", request.point, "target coordinates, e.g. 1/2,0");

    CLI::App* dim = app.add_subcommand("dimension", "moduli dimension from genus and isotropy");
    add_common(dim, true);
    dim->add_option("--genus", request.genus, "genus of the curve")
        ->each([&](const std::string&) { request.genus_given = true; });
    dim->add_option("--ram", request.ram, "ramification data n:coords;n:coords");
    dim->add_option("--sigma", request.sigma, "facets of the marked points, e.g. 0,1;2");

    CLI::App* codim = app.add_subcommand("codim", "codimension bounds for a torsion class");
    add_common(codim, true);
    codim->add_option("--genus", request.genus, "genus of the curve")
        ->each([&](const std::string&) { request.genus_given = true; });
    codim->add_option("--ram", request.ram, "ramification data (sets m)");
    codim->add_option("--point", request.point, "torsion element coordinates");

    CLI::App* verify = app.add_subcommand("verify", "exhaustive verification sweeps");
    add_common(verify, true);
    verify->add_flag("--all", request.all, "sweep all admissible types up to --max-rank");
    verify->add_option("--max-rank", request.max_rank, "rank bound for --all")->default_str("4");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << Json{{"error", {{"code", "bad_arguments"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return 1;
    }

    try {
        request.command = app.get_subcommands().front()->get_name();
        request.type_spec = !type_flag.empty() ? type_flag : positional_type;
        if (facet_given) request.facet = parse_facet_spec(facet_spec);
        if (facet_b_given) request.facet_b = parse_facet_spec(facet_b_spec);

        const RunResult result = run(request);
        const std::string text = render(result.table, request.format);
        if (!request.out.empty()) {
            std::ofstream file(request.out, std::ios::binary);
            if (!file)
                throw validation_error("bad_output_path", "cannot open '" + request.out + "'");
            file << text;
        } else {
            std::cout << text;
        }
        return result.exit_code;
    } catch (const validation_error& e) {
        std::cerr << Json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << Json{{"error", {{"code", "falsification"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return 2;
    }
}

}  // namespace parahoric::cli
