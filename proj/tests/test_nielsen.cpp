#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "fuchs/json_io.hpp"
#include "fuchs/nielsen.hpp"
#include "support.hpp"

using namespace fuchs;
using fix::rand_move;
using fix::rand_pair;

namespace {

const NielsenMove all_moves[] = {
    NielsenMove::swap,          NielsenMove::invert_first, NielsenMove::invert_second,
    NielsenMove::mul_right,     NielsenMove::mul_right_inv, NielsenMove::mul_left,
    NielsenMove::mul_left_inv,  NielsenMove::permute_b,     NielsenMove::permute_c,
    NielsenMove::replace_e,     NielsenMove::replace_f};

} // namespace

TEST_CASE("move names") {
    CHECK(std::string(move_name(NielsenMove::swap)) == "swap");
    CHECK(std::string(move_name(NielsenMove::invert_first)) == "invert_first");
    CHECK(std::string(move_name(NielsenMove::invert_second)) == "invert_second");
    CHECK(std::string(move_name(NielsenMove::mul_right)) == "mul_right");
    CHECK(std::string(move_name(NielsenMove::mul_right_inv)) == "mul_right_inv");
    CHECK(std::string(move_name(NielsenMove::mul_left)) == "mul_left");
    CHECK(std::string(move_name(NielsenMove::mul_left_inv)) == "mul_left_inv");
    CHECK(std::string(move_name(NielsenMove::permute_b)) == "permute_b");
    CHECK(std::string(move_name(NielsenMove::permute_c)) == "permute_c");
    CHECK(std::string(move_name(NielsenMove::replace_e)) == "replace_e");
    CHECK(std::string(move_name(NielsenMove::replace_f)) == "replace_f");
}

TEST_CASE("each move rewrites the matrices as defined") {
    GeneratorPair p = rand_pair();
    const Sl2 a = p.first();
    const Sl2 b = p.second();
    auto expect = [&](NielsenMove m) -> std::pair<Sl2, Sl2> {
        switch (m) {
            case NielsenMove::swap: return {b, a};
            case NielsenMove::invert_first: return {a.inverse(), b};
            case NielsenMove::invert_second: return {a, b.inverse()};
            case NielsenMove::mul_right: return {a, b * a};
            case NielsenMove::mul_right_inv: return {a, b * a.inverse()};
            case NielsenMove::mul_left: return {a, a * b};
            case NielsenMove::mul_left_inv: return {a, a.inverse() * b};
            case NielsenMove::permute_b: return {a.inverse(), a * b};
            case NielsenMove::permute_c: return {a * b, b.inverse()};
            case NielsenMove::replace_e: return {a, a.inverse() * b};
            case NielsenMove::replace_f: return {a * b.inverse(), b};
        }
        throw std::logic_error("unreachable");
    };
    for (NielsenMove m : all_moves) {
        GeneratorPair q = apply_move(p, m);
        auto [ea, eb] = expect(m);
        CHECK(q.first() == ea);
        CHECK(q.second() == eb);
        CHECK(triple_of(q) == predicted_triple(m, triple_of(p)));
    }
}

TEST_CASE("words track the moves and reduce freely") {
    GeneratorPair p = rand_pair();
    auto words_after = [&](NielsenMove m) {
        GeneratorPair q = apply_move(p, m);
        return std::pair<std::string, std::string>{q.first_word().str(),
                                                   q.second_word().str()};
    };
    CHECK(words_after(NielsenMove::swap) == std::pair<std::string, std::string>{"b", "a"});
    CHECK(words_after(NielsenMove::invert_first) == std::pair<std::string, std::string>{"A", "b"});
    CHECK(words_after(NielsenMove::invert_second) == std::pair<std::string, std::string>{"a", "B"});
    CHECK(words_after(NielsenMove::mul_right) == std::pair<std::string, std::string>{"a", "ba"});
    CHECK(words_after(NielsenMove::mul_right_inv) ==
          std::pair<std::string, std::string>{"a", "bA"});
    CHECK(words_after(NielsenMove::mul_left) == std::pair<std::string, std::string>{"a", "ab"});
    CHECK(words_after(NielsenMove::mul_left_inv) ==
          std::pair<std::string, std::string>{"a", "Ab"});
    CHECK(words_after(NielsenMove::permute_b) == std::pair<std::string, std::string>{"A", "ab"});
    CHECK(words_after(NielsenMove::permute_c) == std::pair<std::string, std::string>{"ab", "B"});
    CHECK(words_after(NielsenMove::replace_e) == std::pair<std::string, std::string>{"a", "Ab"});
    CHECK(words_after(NielsenMove::replace_f) == std::pair<std::string, std::string>{"aB", "b"});

    // inverse move cancels: free reduction brings the words home
    GeneratorPair q = apply_move(p, NielsenMove::mul_left);
    q = apply_move(q, NielsenMove::mul_left_inv);
    CHECK(q.first_word().str() == "a");
    CHECK(q.second_word().str() == "b");
    CHECK(q == p);

    // the words spell the matrices: check one composite by substitution
    GeneratorPair r = apply_move(apply_move(p, NielsenMove::permute_b), NielsenMove::mul_right);
    // words: (A, ab * A) -> first = A, second = ab A -> reduces to a? no: a b A stays
    CHECK(r.first_word().str() == "A");
    CHECK(r.second_word().str() == "abA");
    Sl2 a = p.first(), b = p.second();
    CHECK(r.second() == a * b * a.inverse());
}

TEST_CASE("word parser round trip and inverses") {
    Word w = Word::parse("abAAb");
    CHECK(w.str() == "abAAb");
    CHECK(w.inverse().str() == "BaaBA");
    CHECK((w * w.inverse()).str() == "1");
    CHECK(Word::parse("1").empty());
    CHECK_THROWS_AS(Word::parse("abc"), input_error);
    CHECK((Word::parse("aB") * Word::parse("ba")).str() == "aa");
}

TEST_CASE("commutator trace is invariant under every move") {
    for (int i = 0; i < 25; ++i) {
        GeneratorPair p = rand_pair();
        Scalar tau = commutator_trace(p);
        for (NielsenMove m : all_moves) CHECK(commutator_trace(apply_move(p, m)) == tau);
        GeneratorPair q = p;
        for (int k = 0; k < 20; ++k) q = apply_move(q, rand_move());
        CHECK(commutator_trace(q) == tau);
    }
}

TEST_CASE("replay rebuilds the logged pair") {
    GeneratorPair p = rand_pair();
    MoveLog log;
    GeneratorPair q = p;
    for (int k = 0; k < 15; ++k) q = apply_move(q, rand_move(), &log);
    CHECK(log.size() == 15);
    GeneratorPair r = replay(p, log);
    CHECK(r == q);
    CHECK(r.first_word() == q.first_word());
    // each entry's rendered triple matches its recorded words
    CHECK(log.back().triple == render_triple(triple_of(q)));
}

TEST_CASE("triple-only state stays in step with the matrices") {
    GeneratorPair p = rand_pair();
    TripleState s{triple_of(p)};
    for (int k = 0; k < 12; ++k) {
        NielsenMove m = rand_move();
        p = apply_move(p, m);
        s = apply_move(s, m);
        CHECK(s.triple == triple_of(p));
        CHECK(s.first_word == p.first_word());
        CHECK(s.second_word == p.second_word());
    }
}

TEST_CASE("float triple state approximates the exact one") {
    GeneratorPair p = fix::triple_pair(fix::Rational(3), fix::Rational(4), fix::Rational(2));
    TraceTriple t = triple_of(p);
    FloatTripleState f{fuchs::to_bigfloat(t.x, 256), fuchs::to_bigfloat(t.y, 256),
                       fuchs::to_bigfloat(t.z, 256)};
    TripleState s{t};
    BigFloat bound = BigFloat::pow2(-200);
    for (NielsenMove m : {NielsenMove::mul_right, NielsenMove::swap, NielsenMove::permute_b,
                          NielsenMove::invert_second}) {
        s = apply_move(s, m);
        f = apply_move(f, m);
        CHECK((f.x - fuchs::to_bigfloat(s.triple.x, 256)).abs() <= bound);
        CHECK((f.y - fuchs::to_bigfloat(s.triple.y, 256)).abs() <= bound);
        CHECK((f.z - fuchs::to_bigfloat(s.triple.z, 256)).abs() <= bound);
        CHECK(f.first_word == s.first_word);
    }
}

TEST_CASE("log entries serialize with move, triple and words") {
    GeneratorPair p = rand_pair();
    MoveLog log;
    apply_move(p, NielsenMove::permute_c, &log);
    REQUIRE(log.size() == 1);
    nlohmann::json j = log_entry_to_json(log[0]);
    CHECK(j["move"] == "permute_c");
    CHECK(j["triple"].is_array());
    CHECK(j["triple"].size() == 3);
    CHECK(j["words"][0] == "ab");
    CHECK(j["words"][1] == "B");
}
