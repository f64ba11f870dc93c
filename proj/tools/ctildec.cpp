// ctildec: command-line front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap.

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "ctilde/verify.hpp"

using namespace ctilde;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify = 1;
constexpr int exit_input = 2;
constexpr int exit_resource = 3;

struct Options {
    int rank = 3;
    std::string family = "ctilde";
    std::string word;
    std::size_t max_len = 0;
    std::optional<std::size_t> max_affine;
    bool fc_only = false;
    bool series = false;
    std::string map = "p";
    std::string suite = "all";
};

Json read_stdin_json() {
    const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("stdin is not valid JSON: ") + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

GraphPtr graph_of(const Options& o) { return CoxeterGraph::make(parse_family(o.family), o.rank); }

GroupElement element_of(const GraphPtr& g, const std::string& text) { return evaluate(g, parse_word(*g, text)); }

Json classification(const GroupElement& w) {
    const CtildeNormalForm form = classify(w);
    Json j = to_json(form);
    j["affine_length"] = w.graph().family() == Family::Ctilde ? affine_length(w) : 0;
    j["partition"] = std::string(partition_name(partition_class(form)));
    j["word"] = format_word(w.graph(), w.word());
    return j;
}

int cmd_reduce(const Options& o) {
    const GraphPtr g = graph_of(o);
    const GroupElement w = element_of(g, o.word);
    emit({{"word", format_word(*g, w.word())}, {"length", w.length()}});
    return exit_ok;
}

int cmd_classify(const Options& o) {
    const GraphPtr g = graph_of(o);
    const GroupElement w = element_of(g, o.word);
    if (!is_fully_commutative(w)) throw DomainError("element is not fully commutative");
    emit(classification(w));
    return exit_ok;
}

int cmd_realize(const Options& o) {
    const GraphPtr g = graph_of(o);
    const Word nf = realize(g, form_from_json(read_stdin_json()));
    const GroupElement w = evaluate(g, nf);
    emit({{"word", format_word(*g, w.word())}, {"length", w.length()}, {"normal_form_word", format_word(*g, nf)}});
    return exit_ok;
}

int cmd_enumerate(const Options& o) {
    const GraphPtr g = graph_of(o);
    const bool ctilde_graph = g->family() == Family::Ctilde;
    std::vector<GroupElement> elems;
    if (o.fc_only) {
        elems = enumerate_fc_elements(g, o.max_len, o.max_affine);
    } else {
        for (GroupElement& w : enumerate_ball(g, o.max_len))
            if (!o.max_affine || !ctilde_graph || affine_length(w) <= *o.max_affine) elems.push_back(std::move(w));
    }
    if (o.series) {
        std::vector<std::size_t> coeff(o.max_len + 1, 0);
        for (const GroupElement& w : elems) ++coeff[w.length()];
        while (coeff.size() > 1 && coeff.back() == 0) coeff.pop_back();
        emit({{"series", coeff}, {"total", elems.size()}});
        return exit_ok;
    }
    for (const GroupElement& w : elems) {
        Json j = {{"word", format_word(*g, w.word())}, {"length", w.length()}};
        if (ctilde_graph) j["affine_length"] = affine_length(w);
        emit(j);
    }
    return exit_ok;
}

int cmd_inject(const Options& o) {
    const GraphPtr g = graph_of(o);
    const GroupElement w = element_of(g, o.word);
    std::optional<GroupElement> image;
    if (o.map == "p") {
        image = p_embed(w);
    } else if (o.map == "i") {
        image = a_embed(w);
    } else if (o.map == "l") {
        image = l_compose(w);
    } else if (o.map == "I" || o.map == "J") {
        if (!is_fully_commutative(w)) throw DomainError("I and J act on fully commutative elements");
        image = inject(w, classify(w), o.map == "I" ? Injection::I : Injection::J).element;
    } else {
        throw InputError("unknown map '" + o.map + "' (expected p, i, l, I or J)");
    }
    Json j = {{"map", o.map},
              {"rank", image->graph().rank()},
              {"family", std::string(family_name(image->graph().family()))},
              {"word", format_word(image->graph(), image->word())},
              {"length", image->length()}};
    const bool classifiable = image->graph().family() != Family::Atilde && is_fully_commutative(*image);
    j["classification"] = classifiable ? classification(*image) : Json(nullptr);
    emit(j);
    return exit_ok;
}

template <class Tag>
std::pair<AlgebraElement<Tag>, AlgebraElement<Tag>> read_pair(const GraphPtr& g) {
    const Json in = read_stdin_json();
    if (!in.is_object() || !in.contains("a") || !in.contains("b"))
        throw InputError("expected a JSON object {\"a\": element, \"b\": element} on stdin");
    return {element_from_json<Tag>(g, in.at("a")), element_from_json<Tag>(g, in.at("b"))};
}

GraphPtr ctilde_graph(const Options& o) {
    if (parse_family(o.family) != Family::Ctilde) throw InputError("algebra commands need the ctilde family");
    return CoxeterGraph::make(Family::Ctilde, o.rank);
}

int cmd_hecke(const std::string& op, const Options& o) {
    const GraphPtr g = ctilde_graph(o);
    if (op == "mul") {
        auto [a, b] = read_pair<HeckeTag>(g);
        emit(to_json(hecke_multiply(a, b)));
    } else if (op == "embed") {
        emit(to_json(r_embed_hecke(element_from_json<HeckeTag>(g, read_stdin_json()))));
    } else {
        const LemmaDecomposition d = lemma_decompose(element_of(g, o.word));
        emit({{"a_exp", d.a_exp}, {"residual", to_json(d.residual)}});
    }
    return exit_ok;
}

TLElement tl_from_json(const GraphPtr& g, const Json& j) {
    TLElement x = element_from_json<TLTag>(g, j);
    for (const auto& [w, c] : x.terms())
        if (!is_fully_commutative(w)) throw InputError("T_w needs a fully commutative w: " + format_word(*g, w.word()));
    return x;
}

int cmd_tl(const std::string& op, const Options& o) {
    const GraphPtr g = ctilde_graph(o);
    if (op == "mul") {
        const Json in = read_stdin_json();
        if (!in.is_object() || !in.contains("a") || !in.contains("b"))
            throw InputError("expected a JSON object {\"a\": element, \"b\": element} on stdin");
        emit(to_json(tl_multiply(tl_from_json(g, in.at("a")), tl_from_json(g, in.at("b"))), true));
    } else if (op == "embed") {
        emit(to_json(r_embed_tl(tl_from_json(g, read_stdin_json())), true));
    } else {
        const Json in = read_stdin_json();
        if (!in.is_array()) throw InputError("expected a JSON array of elements on stdin");
        std::vector<TLElement> elems;
        for (const Json& e : in) elems.push_back(tl_from_json(g, e));
        const RankReport rep = rank_report(coefficient_matrix(elems));
        emit({{"size", elems.size()}, {"rank", rep.exact}, {"point_ranks", rep.at_points}, {"consistent", rep.consistent()}});
    }
    return exit_ok;
}

int cmd_verify(const Options& o) {
    if (parse_family(o.family) != Family::Ctilde) throw InputError("verify runs on the ctilde family");
    const std::vector<verify::Check> checks = verify::run_suite(o.suite, o.rank, o.max_len);
    Json report = {{"suite", o.suite}, {"rank", o.rank}, {"max_len", o.max_len}, {"pass", verify::all_pass(checks)}};
    report["checks"] = Json::array();
    for (const verify::Check& c : checks) {
        report["checks"].push_back(verify::to_json(c));
        std::cerr << (c.pass ? "pass " : "FAIL ") << c.name << " (" << c.checked << " cases)\n";
    }
    emit(report);
    return verify::all_pass(checks) ? exit_ok : exit_verify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coxeter groups of type C~: fully commutative elements, towers, Hecke and Temperley-Lieb algebras"};
    app.require_subcommand(1);
    Options o;

    auto add_rank = [&](CLI::App* sub) {
        sub->add_option("--rank", o.rank, "number of generators (rank M is C~_{M-1})")->required();
        sub->add_option("--family", o.family, "ctilde, b or atilde")->check(CLI::IsMember({"ctilde", "b", "atilde"}));
    };
    auto add_word = [&](CLI::App* sub) { sub->add_option("word", o.word, "word, e.g. \"t s1 u\"")->required(); };

    auto* reduce = app.add_subcommand("reduce", "canonical reduced word and length");
    add_rank(reduce);
    add_word(reduce);

    auto* classify_cmd = app.add_subcommand("classify", "normal form of a fully commutative element");
    add_rank(classify_cmd);
    add_word(classify_cmd);

    auto* realize_cmd = app.add_subcommand("realize", "word of a normal form read as JSON from stdin");
    add_rank(realize_cmd);

    auto* enumerate = app.add_subcommand("enumerate", "elements up to a length, or their length series");
    add_rank(enumerate);
    enumerate->add_option("--max-len", o.max_len, "maximal Coxeter length")->required();
    enumerate->add_option("--max-affine", o.max_affine, "maximal affine length (ctilde)");
    enumerate->add_flag("--fc-only", o.fc_only, "fully commutative elements only");
    enumerate->add_flag("--series", o.series, "print the length generating series");

    auto* inject_cmd = app.add_subcommand("inject", "apply a tower map");
    add_rank(inject_cmd);
    inject_cmd->add_option("--map", o.map, "p, i, l, I or J")->required()->check(CLI::IsMember({"p", "i", "l", "I", "J"}));
    add_word(inject_cmd);

    auto* hecke = app.add_subcommand("hecke", "Hecke algebra operations");
    hecke->require_subcommand(1);
    auto* hecke_mul = hecke->add_subcommand("mul", "product of {\"a\",\"b\"} from stdin");
    auto* hecke_embed = hecke->add_subcommand("embed", "image under R of an element from stdin");
    auto* hecke_dec = hecke->add_subcommand("decompose", "lead term and residual of R(e_w)");
    for (auto* sub : {hecke_mul, hecke_embed, hecke_dec}) add_rank(sub);
    add_word(hecke_dec);

    auto* tl = app.add_subcommand("tl", "Temperley-Lieb algebra operations");
    tl->require_subcommand(1);
    auto* tl_mul = tl->add_subcommand("mul", "product of {\"a\",\"b\"} from stdin");
    auto* tl_embed = tl->add_subcommand("embed", "image under R of an element from stdin");
    auto* tl_rank = tl->add_subcommand("rank", "rank over Q(q) of an array of elements from stdin");
    for (auto* sub : {tl_mul, tl_embed, tl_rank}) add_rank(sub);

    auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
    add_rank(verify_cmd);
    verify_cmd->add_option("--suite", o.suite, "coxeter, fc, towers, hecke, tl or all")
        ->check(CLI::IsMember({"coxeter", "fc", "towers", "hecke", "tl", "all"}));
    verify_cmd->add_option("--max-len", o.max_len, "maximal Coxeter length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*reduce) return cmd_reduce(o);
        if (*classify_cmd) return cmd_classify(o);
        if (*realize_cmd) return cmd_realize(o);
        if (*enumerate) return cmd_enumerate(o);
        if (*inject_cmd) return cmd_inject(o);
        if (*hecke) return cmd_hecke(*hecke_mul ? "mul" : *hecke_embed ? "embed" : "decompose", o);
        if (*tl) return cmd_tl(*tl_mul ? "mul" : *tl_embed ? "embed" : "rank", o);
        if (*verify_cmd) return cmd_verify(o);
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return exit_resource;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const LemmaViolation& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        emit({{"pass", false}, {"counterexample", e.what()}});
        return exit_verify;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return exit_verify;
    }
    return exit_input;
}
