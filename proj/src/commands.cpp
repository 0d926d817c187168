#include "zsdiv/commands.hpp"

#include <functional>
#include <sstream>

#include "zsdiv/classtable.hpp"
#include "zsdiv/errors.hpp"
#include "zsdiv/grammar.hpp"
#include "zsdiv/quadfield.hpp"
#include "zsdiv/verify.hpp"

namespace zsdiv {

using json = nlohmann::ordered_json;

int exit_code(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::validation: return 1;
        case Status::capability: return 2;
        case Status::numerical: return 3;
    }
    return 1;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::validation: return "validation_error";
        case Status::capability: return "capability_exceeded";
        case Status::numerical: return "numerical_instability";
    }
    return "?";
}

std::string to_json_text(const CommandResult& r) {
    json doc;
    doc["status"] = to_string(r.status);
    doc["command"] = r.command;
    doc["payload"] = r.payload;
    doc["diagnostics"] = r.diagnostics;
    return doc.dump(2);
}

namespace {

void render(std::ostream& os, const json& value, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (value.is_object()) {
        for (const auto& [key, sub] : value.items()) {
            if (sub.is_object() || (sub.is_array() && !sub.empty() && sub[0].is_structured())) {
                os << pad << key << ":\n";
                render(os, sub, indent + 1);
            } else {
                os << pad << key << ": " << sub.dump() << "\n";
            }
        }
    } else if (value.is_array()) {
        for (const auto& sub : value) {
            if (sub.is_structured()) {
                os << pad << "-\n";
                render(os, sub, indent + 1);
            } else {
                os << pad << "- " << sub.dump() << "\n";
            }
        }
    } else {
        os << pad << value.dump() << "\n";
    }
}

CommandResult run_guarded(const std::string& command, const std::function<json()>& body) {
    CommandResult result;
    result.command = command;
    try {
        result.payload = body();
        result.status = Status::ok;
    } catch (const validation_error& e) {
        result.status = Status::validation;
        result.diagnostics.push_back(e.what());
    } catch (const capability_error& e) {
        result.status = Status::capability;
        result.diagnostics.push_back(e.what());
    } catch (const numerical_error& e) {
        result.status = Status::numerical;
        result.diagnostics.push_back(e.what());
    } catch (const internal_error& e) {
        result.status = Status::validation;
        result.diagnostics.push_back(std::string("internal consistency error: ") + e.what());
    }
    return result;
}

json element_json(const QElement& x) {
    json j;
    j["w"] = format_qelement(x);
    const std::string sq = format_qelement_sqrt(x);
    if (sq != j["w"]) j["sqrt"] = sq;
    j["norm"] = elem_norm(x);
    return j;
}

json hnf_json(const QIdeal& ideal) {
    return json::array({ideal.a(), ideal.b(), ideal.c()});
}

json report_json(const CountReport& r) {
    json j;
    j["method"] = to_string(r.method);
    j["value"] = r.value;
    j["residual"] = r.residual;
    return j;
}

ClassGroupData load_class_group(std::int64_t d) {
    const ClassTable table = ClassTable::resolve_from_env();
    return class_group(QuadField::make(d), {}, &table);
}

json class_summary(const ClassGroupData& data) {
    json j;
    j["group"] = format_group(data.group());
    j["order"] = data.group().order();
    j["invariants"] =
        data.group().order() == 1 ? json::array() : json(data.group().moduli());
    json gens = json::array();
    for (const QIdeal& g : data.generator_ideals()) {
        json e;
        e["hnf"] = hnf_json(g);
        e["norm"] = g.norm();
        gens.push_back(e);
    }
    j["generators"] = gens;
    j["source"] = data.source();
    return j;
}

} // namespace

std::string to_human_text(const CommandResult& r) {
    std::ostringstream os;
    os << "status: " << to_string(r.status) << "\n";
    os << "command: " << r.command << "\n";
    render(os, r.payload, 0);
    for (const std::string& d : r.diagnostics) {
        os << "note: " << d << "\n";
    }
    return os.str();
}

CommandResult cmd_davenport(const std::string& group_spec, const CommandOptions&) {
    return run_guarded("davenport", [&] {
        const FiniteAbelianGroup g = parse_group_spec(group_spec);
        const DavenportResult r = davenport(g);
        json payload;
        payload["group"] = format_group(g);
        payload["order"] = g.order();
        payload["exponent"] = g.exponent();
        payload["value"] = r.value;
        payload["cyclic_shortcut"] = r.cyclic_shortcut;
        return payload;
    });
}

CommandResult cmd_zerosum_count(const std::string& group_spec, const std::string& seq_literal,
                                const std::string& method, const CommandOptions& opts) {
    return run_guarded("zerosum count", [&] {
        const FiniteAbelianGroup g = parse_group_spec(group_spec);
        const ZSequence seq = parse_sequence(g, seq_literal);
        json payload;
        payload["group"] = format_group(g);
        payload["sequence"] = format_sequence(seq);
        json results = json::array();
        if (method == "ring" || method.empty()) {
            results.push_back(report_json(count_groupring(seq)));
        } else if (method == "char") {
            results.push_back(report_json(count_char(seq)));
        } else if (method == "brute") {
            results.push_back(report_json(count_brute(seq, opts.max_states)));
        } else if (method == "all") {
            results.push_back(report_json(count_brute(seq, opts.max_states)));
            results.push_back(report_json(count_groupring(seq)));
            results.push_back(report_json(count_char(seq)));
        } else {
            throw validation_error("unknown method '" + method + "' (expected char|ring|brute|all)");
        }
        std::int64_t value = results[0]["value"].get<std::int64_t>();
        for (const auto& r : results) {
            if (r["value"].get<std::int64_t>() != value) {
                throw numerical_error("counting methods disagree: " + results.dump());
            }
        }
        payload["value"] = value;
        payload["results"] = results;
        payload["agree"] = true;
        return payload;
    });
}

CommandResult cmd_zerosum_list(const std::string& group_spec, const std::string& seq_literal,
                               bool maximal, const CommandOptions& opts) {
    return run_guarded("zerosum list", [&] {
        const FiniteAbelianGroup g = parse_group_spec(group_spec);
        const ZSequence seq = parse_sequence(g, seq_literal);
        const std::vector<Selector> sels = maximal ? maximal_zero_sum(seq, opts.max_states)
                                                   : list_zero_sum(seq, opts.max_states);
        json payload;
        payload["group"] = format_group(g);
        payload["sequence"] = format_sequence(seq);
        payload["maximal"] = maximal;
        payload["count"] = sels.size();
        json out = json::array();
        for (const Selector& s : sels) out.push_back(s);
        payload["selectors"] = out;
        return payload;
    });
}

CommandResult cmd_quad_factor(std::int64_t d, const std::string& elem, const CommandOptions&) {
    return run_guarded("quad factor", [&] {
        const QuadField field = QuadField::make(d);
        const QElement x = parse_qelement(field, elem);
        if (elem_is_zero(x)) throw validation_error("cannot factor the zero ideal");
        const ClassGroupData data = load_class_group(d);
        const QIdeal ideal = principal_ideal(x);
        const IdealSequence iseq = sequence_of_ideal(data, ideal);
        json payload;
        payload["d"] = d;
        payload["element"] = element_json(x);
        payload["ideal"] = hnf_json(ideal);
        payload["ideal_norm"] = ideal.norm();
        payload["class_group"] = format_group(data.group());
        json factors = json::array();
        for (std::size_t i = 0; i < iseq.factors.factors.size(); ++i) {
            const auto& [prime, exponent] = iseq.factors.factors[i];
            json f;
            f["hnf"] = hnf_json(prime);
            f["norm"] = prime.norm();
            f["exponent"] = exponent;
            f["class"] = iseq.classes[i].coords;
            factors.push_back(f);
        }
        payload["factors"] = factors;
        return payload;
    });
}

CommandResult cmd_quad_divisors(std::int64_t d, const std::string& elem,
                                const CommandOptions& opts) {
    return run_guarded("quad divisors", [&] {
        const QuadField field = QuadField::make(d);
        const QElement x = parse_qelement(field, elem);
        if (elem_is_zero(x)) throw validation_error("cannot factor the zero ideal");
        const ClassGroupData data = load_class_group(d);
        const QIdeal ideal = principal_ideal(x);
        const std::int64_t count = count_principal_divisors(data, ideal);
        const auto divisors = list_principal_divisors(data, ideal, opts.max_states);
        if (static_cast<std::int64_t>(divisors.size()) != count) {
            throw internal_error("divisor list length disagrees with the counting formula");
        }
        json payload;
        payload["d"] = d;
        payload["element"] = element_json(x);
        payload["ideal"] = hnf_json(ideal);
        payload["count"] = count;
        json list = json::array();
        for (const PrincipalDivisor& div : divisors) {
            json e;
            e["exponents"] = div.exponents;
            e["hnf"] = hnf_json(div.ideal);
            e["generator"] = element_json(div.generator);
            list.push_back(e);
        }
        payload["divisors"] = list;
        return payload;
    });
}

CommandResult cmd_quad_decompose(std::int64_t d, const std::string& alpha,
                                 const std::string& beta, const CommandOptions& opts) {
    return run_guarded("quad decompose", [&] {
        const QuadField field = QuadField::make(d);
        const QElement a = parse_qelement(field, alpha);
        const QElement b = parse_qelement(field, beta);
        const ClassGroupData data = load_class_group(d);
        const auto decompositions = decompose_pair(data, a, b, opts.max_states);
        json payload;
        payload["d"] = d;
        payload["alpha"] = element_json(a);
        payload["beta"] = element_json(b);
        payload["ideal"] = hnf_json(ideal_from_generators(field, {a, b}));
        payload["class_group"] = format_group(data.group());
        json out = json::array();
        for (const PairDecomposition& dec : decompositions) {
            json e;
            e["principal_hnf"] = hnf_json(dec.principal_part);
            e["generator"] = element_json(dec.generator);
            json residue = json::array();
            for (const auto& [prime, c] : dec.residue) {
                json r;
                r["hnf"] = hnf_json(prime);
                r["exponent"] = c;
                residue.push_back(r);
            }
            e["residue"] = residue;
            out.push_back(e);
        }
        payload["decompositions"] = out;
        return payload;
    });
}

CommandResult cmd_quad_classgroup(std::int64_t d, const CommandOptions&) {
    return run_guarded("quad classgroup", [&] {
        const QuadField field = QuadField::make(d);
        const ClassGroupData data = load_class_group(d);
        json payload;
        payload["d"] = d;
        payload["discriminant"] = field.discriminant();
        payload["minkowski_bound"] = field.minkowski_bound();
        payload.update(class_summary(data));
        return payload;
    });
}

CommandResult cmd_quad_irreducible(std::int64_t d, const std::string& elem,
                                   const CommandOptions&) {
    return run_guarded("quad irreducible", [&] {
        const QuadField field = QuadField::make(d);
        const QElement x = parse_qelement(field, elem);
        const ClassGroupData data = load_class_group(d);
        const bool verdict = is_irreducible(data, x);
        json payload;
        payload["d"] = d;
        payload["element"] = element_json(x);
        payload["divisor_count"] = count_principal_divisors(data, principal_ideal(x));
        payload["irreducible"] = verdict;
        return payload;
    });
}

CommandResult cmd_verify(const std::string& scope, std::uint64_t seed, const CommandOptions&) {
    CommandResult result = run_guarded("verify", [&] {
        const std::vector<VerifyCheck> checks = run_verify(scope, seed);
        json payload;
        payload["scope"] = scope;
        payload["seed"] = seed;
        std::size_t passed = 0;
        json list = json::array();
        for (const VerifyCheck& c : checks) {
            json e;
            e["name"] = c.name;
            e["ok"] = c.ok;
            e["detail"] = c.detail;
            list.push_back(e);
            if (c.ok) ++passed;
        }
        payload["checks"] = list;
        payload["passed"] = passed;
        payload["failed"] = checks.size() - passed;
        return payload;
    });
    if (result.status == Status::ok && result.payload["failed"].get<std::size_t>() > 0) {
        result.status = Status::validation;
        result.diagnostics.push_back(std::to_string(result.payload["failed"].get<std::size_t>()) +
                                     " verification check(s) failed");
    }
    return result;
}

} // namespace zsdiv
