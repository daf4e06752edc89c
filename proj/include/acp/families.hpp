#pragma once

#include <acp/graph.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace acp
{
    struct FamilySpec;

    /// Parametrised graph families with known additive chromatic number.
    ///
    /// Vertex orderings produced by generate():
    ///  - path, cycle, complete: 0..n-1 along the path / cycle.
    ///  - complete split: clique 0..q-1, then stable set q..q+s-1.
    ///  - fan, wheel, windmill and join: the inner graph first, the complete part last
    ///    (fan: P_{n+1} then hub; wheel: C_n then hub; windmill: m copies of K_{n-1} then hub).
    ///  - spiders: u_1..u_q = 0..q-1, then v_1..v_q = q..2q-1.
    ///  - suns: u_1..u_m = 0..m-1, v_1..v_m = m..2m-1, wheel-sun hub w = 2m.
    ///    v_i is adjacent to u_i and u_{i+1} (indices mod m).
    ///  - complete multipartite: parts laid out consecutively.
    ///  - bipartite: U = 0..a-1, V = a..a+b-1.
    namespace family
    {
        struct Path { int n; };
        struct Cycle { int n; };
        struct Complete { int n; };
        struct CompleteSplit { int clique; int stable; };
        struct Fan { int n; };
        struct Wheel { int n; };
        struct Windmill { int n; int m; };
        struct ThinSpider { int q; };
        struct ThickSpider { int q; };
        struct CycleSun { int m; };
        struct WheelSun { int m; };
        struct CompleteSun { int m; };
        struct CompleteMultipartite { std::vector<int> parts; };

        /// Bipartite graph with |U| = a, |V| = b, every u of degree du and every v of degree a*du/b.
        /// Only generated when du < 2 * dv, the condition under which U labeled 2 and V labeled 1 works.
        struct Biregular { int a; int b; int du; };

        struct JoinWithComplete { std::shared_ptr<const FamilySpec> inner; int q; };
    }

    struct FamilySpec
    {
        std::variant<family::Path, family::Cycle, family::Complete, family::CompleteSplit, family::Fan, family::Wheel,
            family::Windmill, family::ThinSpider, family::ThickSpider, family::CycleSun, family::WheelSun,
            family::CompleteSun, family::CompleteMultipartite, family::Biregular, family::JoinWithComplete>
            kind;
    };

    /// Text form "name:params", e.g. "cycle:7", "thin-spider:4", "multipartite:3,2,2",
    /// "windmill:4,3", "join:2:cycle:9". Throws FormatError on syntax, InputError on domain.
    auto parse_family_spec(std::string_view text) -> FamilySpec;
    auto spec_string(const FamilySpec & spec) -> std::string;

    /// Throws InputError when parameters are outside the family's domain.
    auto validate(const FamilySpec & spec) -> void;

    auto generate(const FamilySpec & spec) -> Graph;

    /// Closed-form additive chromatic number.
    auto eta_formula(const FamilySpec & spec) -> int;

    /// max(eta(G), q) for G v K_q. Throws PreconditionError unless 1 <= q <= n - Delta - 1.
    auto eta_of_join_with_complete(int inner_eta, int inner_n, int inner_max_degree, int q) -> int;

    enum class Provenance
    {
        construction,   // explicit assignment from the family's proof
        solver_fallback // exact search was used (for the whole labeling or an inner part)
    };

    auto name_of(Provenance p) -> const char *;

    struct EtaCertificate
    {
        FamilySpec spec;
        int eta = 0;
        std::optional<Labeling> labeling;
        Provenance provenance = Provenance::construction;
        std::string lower_bound_witness;
    };

    /// Labeling with k = eta_formula(spec) that verifies on generate(spec). Throws std::logic_error
    /// if a construction fails verification (an implementation bug).
    auto construct_labeling(const FamilySpec & spec) -> Labeling;

    auto certify(const FamilySpec & spec) -> EtaCertificate;

    /// Vertex count of generate(spec), without building the graph.
    auto family_order(const FamilySpec & spec) -> int;
}
