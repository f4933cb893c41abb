#include "lff/cfg/shared.hpp"

#include <functional>

namespace lff::cfg {

SharedPointedSystem::SharedPointedSystem(const WeightedGrammar& g)
    : grammar_(&g),
      semiring_(g.semiring()),
      generators_(g.nonterminals().size() + g.terminals().size())
{
    const std::size_t letters = g.terminals().size();
    const std::size_t vars = g.nonterminals().size();
    // Derivatives of generators: rules for nonterminals, rho_b for terminals.
    for (std::size_t x = 0; x < vars; ++x)
        for (Letter a = 0; a < letters; ++a) generator_steps_.push_back(embed(g.rule(x, a)));
    for (Letter b = 0; b < letters; ++b)
        for (Letter a = 0; a < letters; ++a)
            generator_steps_.push_back(a == b ? Value{{SymbolWord{}, semiring_.one()}} : Value{});
}

void SharedPointedSystem::accumulate(Value& into, SymbolWord w, const Element& c) const
{
    if (semiring_.is_zero(c)) return;
    auto [it, inserted] = into.try_emplace(std::move(w), c);
    if (inserted) return;
    it->second = semiring_.add(it->second, c);
    if (semiring_.is_zero(it->second)) into.erase(it);
}

SharedPointedSystem::Value SharedPointedSystem::embed(const Polynomial& p) const
{
    grammar_->check_polynomial(p);
    const auto vars = grammar_->nonterminals().size();
    Value v;
    for (const auto& [word, c] : p.terms()) {
        SymbolWord w;
        for (const auto& g : word)
            w.push_back(static_cast<Symbol>(g.is_variable() ? *grammar_->find_nonterminal(g.id)
                                                            : vars + *grammar_->terminals().find(g.id)));
        accumulate(v, std::move(w), c);
    }
    return v;
}

Element SharedPointedSystem::symbol_output(Symbol s) const
{
    const auto vars = grammar_->nonterminals().size();
    if (s < vars) return grammar_->output(s);
    if (s < generators_) return semiring_.zero();
    return nodes_[s - generators_].output;
}

const SharedPointedSystem::Value& SharedPointedSystem::symbol_step(Symbol s, Letter a) const
{
    if (s < generators_) return generator_steps_[s * alphabet_size() + a];
    const std::size_t n = s - generators_;
    if (!nodes_[n].deriv[a]) {
        // step and fuse_of may grow nodes_, so nothing may point into it meanwhile.
        const Value body = nodes_[n].body;
        Value d = fuse_of(step(body, a));
        nodes_[n].deriv[a] = std::move(d);
    }
    return *nodes_[n].deriv[a];
}

SharedPointedSystem::Value SharedPointedSystem::fuse_of(Value p) const
{
    if (p.empty()) return p;
    if (p.size() == 1 && p.begin()->first.empty()) return p;
    auto found = index_.find(p);
    Symbol s;
    if (found != index_.end()) {
        s = found->second;
    } else {
        s = static_cast<Symbol>(generators_ + nodes_.size());
        const Element o = output(p);
        nodes_.push_back(Node{p, o, std::vector<std::optional<Value>>(alphabet_size())});
        index_.emplace(std::move(p), s);
    }
    return Value{{SymbolWord{s}, semiring_.one()}};
}

SharedPointedSystem::Output SharedPointedSystem::output(const Value& v) const
{
    Element total = semiring_.zero();
    for (const auto& [word, c] : v) {
        Element product = c;
        for (Symbol s : word) {
            product = semiring_.mul(product, symbol_output(s));
            if (semiring_.is_zero(product)) break;
        }
        total = semiring_.add(total, product);
    }
    return total;
}

SharedPointedSystem::Value SharedPointedSystem::step(const Value& v, Letter a) const
{
    kernel::check_word(std::span<const Letter>(&a, 1), alphabet_size());
    Value result;
    for (const auto& [word, c] : v) {
        // sum_i o(s_1 .. s_{i-1}) delta_a(s_i) F(s_{i+1} .. s_n)
        Element prefix = c;
        for (std::size_t i = 0; i < word.size() && !semiring_.is_zero(prefix); ++i) {
            const Value head = symbol_step(word[i], a);
            if (!head.empty()) {
                SymbolWord rest;
                if (i + 1 < word.size()) {
                    Value suffix{{SymbolWord(word.begin() + static_cast<std::ptrdiff_t>(i) + 1, word.end()),
                                  semiring_.one()}};
                    const Value f = fuse_of(std::move(suffix));
                    rest = f.begin()->first;
                }
                for (const auto& [h, k] : head) {
                    SymbolWord w = h;
                    w.insert(w.end(), rest.begin(), rest.end());
                    accumulate(result, std::move(w), semiring_.mul(prefix, k));
                }
            }
            prefix = semiring_.mul(prefix, symbol_output(word[i]));
        }
    }
    return result;
}

Polynomial SharedPointedSystem::expand(const Value& v) const
{
    const auto& vars = grammar_->nonterminals();
    const auto& terms = grammar_->terminals();
    std::map<Symbol, Polynomial> expanded;
    std::function<Polynomial(Symbol)> symbol = [&](Symbol s) -> Polynomial {
        if (s < vars.size()) return Polynomial::unit(algebra::Generator::variable(vars[s]), semiring_);
        if (s < generators_)
            return Polynomial::unit(algebra::Generator::terminal(terms.name(s - vars.size())), semiring_);
        if (auto it = expanded.find(s); it != expanded.end()) return it->second;
        // expand(F(p)) = fuse(c#(expand(p)))
        Polynomial body(semiring_);
        for (const auto& [word, c] : nodes_[s - generators_].body) {
            Polynomial product = Polynomial::one(semiring_);
            for (Symbol t : word) product = product * symbol(t);
            body = body + algebra::scale(c, product);
        }
        Polynomial image = fuse(pointed_step(*grammar_, body), *grammar_);
        expanded.emplace(s, image);
        return image;
    };
    Polynomial result(semiring_);
    for (const auto& [word, c] : v) {
        Polynomial product = Polynomial::one(semiring_);
        for (Symbol s : word) product = product * symbol(s);
        result = result + algebra::scale(c, product);
    }
    return result;
}

}  // namespace lff::cfg
