#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "devries/errors.hpp"
#include "devries/morphisms.hpp"
#include "devries/suites.hpp"

using namespace devries;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_parse = 2;
constexpr int exit_scale = 3;

struct CarrierChoice {
    bool interval = true;
    std::optional<FiniteAlgebraSpec> finite;
};

CarrierChoice load_carrier(const std::string& spec) {
    CarrierChoice out;
    if (spec == "interval") return out;
    if (spec.rfind("finite:", 0) == 0) {
        std::ifstream in(spec.substr(7));
        if (!in) throw ParseError("cannot open carrier file '" + spec.substr(7) + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        out.interval = false;
        out.finite = parse_finite_algebra(buf.str());
        return out;
    }
    throw ParseError("carrier must be 'interval' or 'finite:<file>'");
}

DomainKind parse_domain(const std::string& name) {
    if (name == "int") return DomainKind::integers;
    if (name == "rational") return DomainKind::rationals;
    throw ParseError("domain must be 'int' or 'rational'");
}

void emit(const CheckReport& report, bool kv) {
    std::cout << (kv ? report.render_kv() : report.render_text());
}

// --- Expression evaluation over a Specker algebra -------------------------------

template <ProximityCarrier C>
class Evaluator {
public:
    Evaluator(const C& carrier, std::map<std::string, Specker<C>> bindings)
        : carrier_(carrier), bindings_(std::move(bindings)) {}

    Specker<C> eval(std::string_view text) {
        text_ = text;
        pos_ = 0;
        Specker<C> result = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing input in expression: '" + std::string(text_.substr(pos_)) +
                             "'");
        return result;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Specker<C> expr() {
        Specker<C> acc = term();
        for (;;) {
            if (eat('+'))
                acc = sp_add(acc, term());
            else if (eat('-'))
                acc = sp_sub(acc, term());
            else
                return acc;
        }
    }

    Specker<C> term() {
        Specker<C> acc = factor();
        while (eat('*')) acc = sp_mul(acc, factor());
        return acc;
    }

    Specker<C> factor() {
        skip_ws();
        if (eat('-')) return sp_negate(factor());
        if (eat('(')) {
            Specker<C> inner = expr();
            if (!eat(')')) throw ParseError("missing ')' in expression");
            return inner;
        }
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
        throw ParseError(std::string("unexpected character '") + c + "' in expression");
    }

    Specker<C> literal() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        return Specker<C>::constant(carrier_,
                                    parse_domain_value(text_.substr(start, pos_ - start)));
    }

    Specker<C> name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        std::string ident(text_.substr(start, pos_ - start));
        if (ident == "min" || ident == "max") {
            if (!eat('(')) throw ParseError(ident + " needs arguments");
            Specker<C> a = expr();
            if (!eat(',')) throw ParseError(ident + " needs two arguments");
            Specker<C> b = expr();
            if (!eat(')')) throw ParseError("missing ')' after " + ident);
            return ident == "min" ? sp_meet(a, b) : sp_join(a, b);
        }
        if (ident == "abs") {
            if (!eat('(')) throw ParseError("abs needs an argument");
            Specker<C> a = expr();
            if (!eat(')')) throw ParseError("missing ')' after abs");
            return sp_abs(a);
        }
        auto it = bindings_.find(ident);
        if (it == bindings_.end()) throw ParseError("unbound name '" + ident + "'");
        return it->second;
    }

    const C& carrier_;
    std::map<std::string, Specker<C>> bindings_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

int run_check(const std::string& target, const std::string& carrier_spec,
              const std::string& domain_name, std::uint64_t seed, int samples,
              const std::string& morphism_file, bool kv) {
    DomainKind kind = parse_domain(domain_name);
    CarrierChoice carrier = load_carrier(carrier_spec);

    if (target == "dv-axioms") {
        if (carrier.interval) {
            CheckReport r = dv_interval_relation_suite(
                [](const RegularOpenSet& u, const RegularOpenSet& v) {
                    return ro_proximity(u, v);
                },
                seed, samples);
            emit(r, kv);
            return r.all_pass() ? exit_ok : exit_failed;
        }
        CheckReport r = check_devries_axioms(carrier.finite->ba, carrier.finite->prox);
        emit(r, kv);
        return r.all_pass() ? exit_ok : exit_failed;
    }
    if (target == "prox-axioms") {
        if (carrier.interval) {
            IntervalCarrier ic;
            CheckReport r = prox_axiom_suite(ic, seed, kind, samples);
            emit(r, kv);
            return r.all_pass() ? exit_ok : exit_failed;
        }
        CheckReport validation = check_devries_axioms(carrier.finite->ba, carrier.finite->prox);
        if (!validation.all_pass()) {
            emit(validation, kv);
            return exit_failed;
        }
        FiniteCarrier fc(carrier.finite->ba.atom_count, carrier.finite->prox);
        CheckReport r = prox_axiom_suite(fc, seed, kind, samples);
        bool is_order = true;
        for (Mask a : fc.algebra().elements())
            for (Mask b : fc.algebra().elements())
                is_order = is_order && fc.prox(a, b) == fc.leq(a, b);
        if (is_order) r.add_pass("note", "proximity equals <=");
        emit(r, kv);
        return r.all_pass() ? exit_ok : exit_failed;
    }
    if (target == "morphism") {
        if (morphism_file.empty()) throw ParseError("check morphism needs --file");
        std::ifstream in(morphism_file);
        if (!in) throw ParseError("cannot open morphism file '" + morphism_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        MorphismSpec spec = parse_morphism_file(buf.str());
        Rng rng(seed);
        if (spec.kind == MorphismSpec::Kind::finite) {
            FiniteCarrier src(spec.src_atoms), dst(spec.dst_atoms);
            CheckReport mcheck = check_devries_morphism(spec.table, src.algebra(),
                                                        src.proximity(), dst.algebra(),
                                                        dst.proximity());
            if (!mcheck.all_pass()) {
                emit(mcheck, kv);
                return exit_failed;
            }
            FinMorphism alpha = extend_morphism(spec.table, src, dst);
            std::function<FinSpecker(const FinSpecker&)> fn = [&alpha](const FinSpecker& s) {
                return alpha.apply(s);
            };
            CheckReport r = check_proximity_morphism<FiniteCarrier, FiniteCarrier>(
                fn, src, dst, rng, kind, samples);
            emit(r, kv);
            return r.all_pass() ? exit_ok : exit_failed;
        }
        IntervalCarrier ic;
        IntervalMorphism alpha = phi_star(spec.plmap, ic, ic);
        std::function<Specker<IntervalCarrier>(const Specker<IntervalCarrier>&)> fn =
            [&alpha](const Specker<IntervalCarrier>& s) { return alpha.apply(s); };
        CheckReport r =
            check_proximity_morphism<IntervalCarrier, IntervalCarrier>(fn, ic, ic, rng, kind,
                                                                       samples);
        emit(r, kv);
        return r.all_pass() ? exit_ok : exit_failed;
    }
    if (target == "fring") {
        if (carrier.interval) {
            IntervalCarrier ic;
            CheckReport r = fring_suite(ic, seed, kind, samples);
            emit(r, kv);
            return r.all_pass() ? exit_ok : exit_failed;
        }
        FiniteCarrier fc(carrier.finite->ba.atom_count, carrier.finite->prox);
        CheckReport r = fring_suite(fc, seed, kind, samples);
        emit(r, kv);
        return r.all_pass() ? exit_ok : exit_failed;
    }
    throw ParseError("unknown check target '" + target + "'");
}

int run_ends(const std::string& carrier_spec, bool kv) {
    CarrierChoice carrier = load_carrier(carrier_spec);
    if (carrier.interval)
        throw ScaleError("the interval carrier has uncountably many ends; use a finite carrier");
    const FiniteBooleanAlgebra& ba = carrier.finite->ba;
    CheckReport validation = check_devries_axioms(ba, carrier.finite->prox);
    if (!validation.all_pass()) {
        emit(validation, kv);
        return exit_failed;
    }
    std::vector<Mask> gens = ends(ba, carrier.finite->prox);
    if (kv) {
        std::cout << "ends=" << gens.size() << "\n";
        for (std::size_t i = 0; i < gens.size(); ++i)
            std::cout << "end=" << i << " generator=" << ba.element_to_string(gens[i]) << "\n";
    } else {
        std::cout << gens.size() << " ends\n";
        for (std::size_t i = 0; i < gens.size(); ++i)
            std::cout << "end " << i << ": generator " << ba.element_to_string(gens[i]) << "\n";
    }
    return exit_ok;
}

int run_dual(const std::string& morphism_file, bool kv) {
    std::ifstream in(morphism_file);
    if (!in) throw ParseError("cannot open morphism file '" + morphism_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    MorphismSpec spec = parse_morphism_file(buf.str());
    if (spec.kind != MorphismSpec::Kind::finite)
        throw ScaleError("dual maps are computed for finite carriers only");
    FiniteCarrier src(spec.src_atoms), dst(spec.dst_atoms);
    FinMorphism alpha = extend_morphism(spec.table, src, dst);
    auto ends_src = ends(src.algebra(), src.proximity());
    auto ends_dst = ends(dst.algebra(), dst.proximity());
    std::vector<int> dual = dual_of_morphism(alpha, ends_src, ends_dst);
    for (std::size_t j = 0; j < dual.size(); ++j) {
        if (kv)
            std::cout << "target-end=" << j << " source-end=" << dual[j] << "\n";
        else
            std::cout << "end " << j << " of target (generator "
                      << dst.algebra().element_to_string(ends_dst[j]) << ") -> end " << dual[j]
                      << " of source (generator "
                      << src.algebra().element_to_string(ends_src[dual[j]]) << ")\n";
    }
    return exit_ok;
}

int run_eval(const std::string& expr, const std::string& carrier_spec,
             const std::vector<std::string>& binds) {
    CarrierChoice carrier = load_carrier(carrier_spec);
    auto split_bind = [](const std::string& b) {
        auto eq = b.find('=');
        if (eq == std::string::npos) throw ParseError("--bind needs name=element");
        return std::pair<std::string, std::string>(b.substr(0, eq), b.substr(eq + 1));
    };
    if (carrier.interval) {
        IntervalCarrier ic;
        std::map<std::string, Specker<IntervalCarrier>> bindings;
        for (const auto& b : binds) {
            auto [name, text] = split_bind(b);
            bindings.emplace(name, parse_interval_element(ic, text));
        }
        Evaluator<IntervalCarrier> ev(ic, std::move(bindings));
        std::cout << to_string(ev.eval(expr)) << "\n";
        return exit_ok;
    }
    FiniteCarrier fc(carrier.finite->ba.atom_count, carrier.finite->prox);
    std::map<std::string, Specker<FiniteCarrier>> bindings;
    for (const auto& b : binds) {
        auto [name, text] = split_bind(b);
        bindings.emplace(name, parse_finite_element(fc, text));
    }
    Evaluator<FiniteCarrier> ev(fc, std::move(bindings));
    std::cout << to_string(ev.eval(expr)) << "\n";
    return exit_ok;
}

int run_normalize(const std::string& step) {
    PiecewiseFunction f = parse_step_function(step);
    std::cout << to_string(normalize(f)) << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact de Vries powers: normal step functions, Specker algebras, proximities"};
    app.require_subcommand(1);

    std::string carrier_spec = "interval";
    std::string domain_name = "int";
    std::uint64_t seed = 17;
    int samples = 500;
    bool kv = false;

    auto add_common = [&](CLI::App* cmd, bool with_sampling) {
        cmd->add_option("--carrier", carrier_spec, "interval | finite:<file>");
        cmd->add_flag("--kv", kv, "machine-readable key=value output");
        if (with_sampling) {
            cmd->add_option("--domain", domain_name, "int | rational");
            cmd->add_option("--seed", seed, "random seed");
            cmd->add_option("-n,--samples", samples, "samples per check");
        }
    };

    std::string check_target;
    std::string morphism_file;
    CLI::App* check = app.add_subcommand("check", "run an axiom or property suite");
    check->add_option("target", check_target, "dv-axioms | prox-axioms | morphism | fring")
        ->required();
    check->add_option("--file", morphism_file, "morphism file (for 'morphism')");
    add_common(check, true);

    CLI::App* ends_cmd = app.add_subcommand("ends", "list the ends of a finite carrier");
    add_common(ends_cmd, false);

    std::string dual_file;
    CLI::App* dual_cmd = app.add_subcommand("dual", "dual point map of a morphism");
    dual_cmd->add_option("--file", dual_file, "morphism file")->required();
    dual_cmd->add_flag("--kv", kv, "machine-readable output");

    std::string expr;
    std::vector<std::string> binds;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an element expression");
    eval_cmd->add_option("expression", expr, "e.g. \"x + y\" or \"abs(x - 1)\"")->required();
    eval_cmd->add_option("--bind", binds, "name=element (repeatable)");
    add_common(eval_cmd, false);

    std::string step;
    CLI::App* norm_cmd = app.add_subcommand("normalize", "normalize a step function");
    norm_cmd->add_option("function", step, "e.g. \"1 on (1/4,1/2]; 0 elsewhere\"")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(check_target, carrier_spec, domain_name, seed, samples,
                             morphism_file, kv);
        if (ends_cmd->parsed()) return run_ends(carrier_spec, kv);
        if (dual_cmd->parsed()) return run_dual(dual_file, kv);
        if (eval_cmd->parsed()) return run_eval(expr, carrier_spec, binds);
        if (norm_cmd->parsed()) return run_normalize(step);
    } catch (const ScaleError& e) {
        std::cerr << "scale refusal: " << e.what() << "\n";
        return exit_scale;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    }
    return exit_ok;
}
