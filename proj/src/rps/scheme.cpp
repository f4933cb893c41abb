#include "lff/rps/scheme.hpp"

#include <algorithm>
#include <set>

namespace lff::rps {

namespace {

std::string join_path(const std::vector<std::string>& path)
{
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) out += " → ";
        out += path[i];
    }
    return out;
}

}  // namespace

UnguardedScheme::UnguardedScheme(std::vector<std::string> path)
    : Error("unguarded recursion: " + join_path(path)), path_(std::move(path))
{
}

Scheme::Scheme(Signature givens, std::vector<Definition> definitions)
    : givens_(std::move(givens)), definitions_(std::move(definitions))
{
    std::set<std::string_view> names;
    for (const auto& d : definitions_) {
        if (d.name.empty() || givens_.contains(d.name) || !names.insert(d.name).second)
            throw IllRanked("operation '" + d.name + "' clashes with another symbol");
        std::set<std::string_view> params(d.params.begin(), d.params.end());
        if (params.size() != d.params.size()) throw IllRanked("repeated parameter in '" + d.name + "'");
        for (const auto& p : d.params)
            if (givens_.contains(p) || names.contains(p)) throw IllRanked("parameter '" + p + "' shadows a symbol");
    }
    for (const auto& d : definitions_) {
        check_term(d.body);
        auto check_vars = [&](const auto& self, const Term& t) -> void {
            if (t.is_variable()) {
                if (std::find(d.params.begin(), d.params.end(), t.name) == d.params.end())
                    throw IllRanked("unbound variable '" + t.name + "' in '" + d.name + "'");
                return;
            }
            for (const auto& a : t.args) self(self, a);
        };
        check_vars(check_vars, d.body);
        if (!d.body.is_variable() && find_definition(d.body.name)) throw UnguardedScheme({d.name, d.body.name});
    }
}

const Scheme::Definition* Scheme::find_definition(std::string_view name) const
{
    auto it = std::find_if(definitions_.begin(), definitions_.end(), [&](const Definition& d) { return d.name == name; });
    return it == definitions_.end() ? nullptr : &*it;
}

void Scheme::check_term(const Term& t) const
{
    if (t.is_variable()) return;
    std::size_t arity = 0;
    if (auto it = givens_.find(t.name); it != givens_.end()) {
        arity = it->second;
    } else if (const Definition* d = find_definition(t.name)) {
        arity = d->params.size();
    } else {
        throw IllRanked("unknown symbol '" + t.name + "'");
    }
    if (t.args.size() != arity)
        throw IllRanked("'" + t.name + "' expects " + std::to_string(arity) + " arguments, got " +
                        std::to_string(t.args.size()));
    for (const auto& a : t.args) check_term(a);
}

namespace {

class Unraveller {
public:
    Unraveller(const Scheme& s, std::size_t depth) : scheme_(s), cut_(depth) {}

    TreePrefix build(const Term& t, std::size_t depth) const
    {
        if (t.is_variable()) return TreePrefix::variable(t.name);
        if (const auto* def = scheme_.find_definition(t.name)) {
            if (depth >= cut_) return TreePrefix::bottom();
            return build(instantiate(def->body, *def, t.args), depth);
        }
        if (depth >= cut_ && has_call(t)) return TreePrefix::bottom();
        TreePrefix node = TreePrefix::apply(t.name);
        node.children.reserve(t.args.size());
        for (const auto& a : t.args) node.children.push_back(build(a, depth + 1));
        return node;
    }

private:
    bool has_call(const Term& t) const
    {
        if (t.is_variable()) return false;
        if (scheme_.find_definition(t.name)) return true;
        return std::any_of(t.args.begin(), t.args.end(), [this](const Term& a) { return has_call(a); });
    }

    static Term instantiate(const Term& body, const Scheme::Definition& def, const std::vector<Term>& args)
    {
        if (body.is_variable()) {
            auto it = std::find(def.params.begin(), def.params.end(), body.name);
            return args[static_cast<std::size_t>(it - def.params.begin())];
        }
        Term out = Term::apply(body.name);
        out.args.reserve(body.args.size());
        for (const auto& a : body.args) out.args.push_back(instantiate(a, def, args));
        return out;
    }

    const Scheme& scheme_;
    std::size_t cut_;
};

std::optional<std::vector<std::size_t>> first_difference(const TreePrefix& a, const TreePrefix& b,
                                                         std::vector<std::size_t>& path)
{
    if (a.is_bottom() || b.is_bottom()) return std::nullopt;
    if (a.kind != b.kind || a.name != b.name || a.children.size() != b.children.size()) return path;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        path.push_back(i);
        if (auto d = first_difference(a.children[i], b.children[i], path)) return d;
        path.pop_back();
    }
    return std::nullopt;
}

}  // namespace

TreePrefix unfold(const Scheme& s, const Term& root, std::size_t depth)
{
    s.check_term(root);
    return Unraveller(s, depth).build(root, 1);
}

PrefixVerdict prefix_compare(const TreePrefix& a, const TreePrefix& b)
{
    std::vector<std::size_t> path;
    if (auto d = first_difference(a, b, path)) return DifferingPath{std::move(*d)};
    return kernel::Equal{};
}

PrefixVerdict prefix_equal(const Scheme& s1, const Term& r1, const Scheme& s2, const Term& r2, std::size_t depth)
{
    if (s1.givens() != s2.givens()) throw IllRanked("schemes over different signatures");
    return prefix_compare(unfold(s1, r1, depth), unfold(s2, r2, depth));
}

}  // namespace lff::rps
