#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diagsemi/bipartition.hpp"

namespace diagsemi {

enum class LetterKind {
    Diapsis,        // h_i
    Transapsis,     // t_i
    Transposition,  // s_i
    Monapsis,       // e_i
    Apsis,          // a<m>_i
    PfForward,      // f_i
    PfBackward,     // b_i
};

struct Letter {
    LetterKind kind;
    int index = 0;
    int m = 0;  // apsis arity, used by Apsis letters only
    bool operator==(const Letter&) const = default;
    bool operator<(const Letter& o) const;
};

using Word = std::vector<Letter>;

struct GenWord {
    int k = 0;
    Word letters;
};

struct RelationSet {
    std::string name;
    int k = 0;
    int m = 0;  // modulus for mod_m / mod_m2
    std::vector<std::pair<Word, Word>> pairs;
};

Letter make_letter(LetterKind kind, int index, int m = 0);
Bipartition eval_letter(int k, const Letter& l);
Bipartition eval(int k, const Word& w);
Bipartition eval(const GenWord& w);

// jones, brauer1, brauer2, brauer3, mod_m, mod_m2, pubb, ppttn,
// ubb1, ubb2, syminv, planarsyminv, pmod2, pmod2_implied.
std::vector<std::string> relation_set_names();
RelationSet relations(const std::string& name, int k, int m = 2);
std::vector<Letter> presentation_alphabet(const std::string& name, int k,
                                          int m = 2);

struct SoundnessReport {
    bool sound = true;
    std::vector<int> failing;  // indices into pairs
};
SoundnessReport check_soundness(const RelationSet& rs, int k);

// Bounded congruence closure over words up to length_cap; stabilized means
// the count is unchanged at length_cap + 2 and classes evaluate injectively.
struct CongruenceResult {
    long long class_count = 0;
    bool stabilized = false;
};
CongruenceResult congruence_size(const std::vector<Letter>& alphabet,
                                 const RelationSet& rs, int k, int length_cap);

// Products of runs r_{j,i} = h_j h_{j-1} ... h_i with strictly increasing
// i's and j's, plus the empty word; catalan(k) words evaluating onto J_k.
std::vector<GenWord> jones_normal_forms(int k);

enum class GenOrder { DiapsisFirst, TransapsisFirst };

// Shortlex-minimal word for every element of the planar mod-2 monoid,
// in breadth-first discovery order starting from the identity.
std::vector<std::pair<Bipartition, Word>> geodesic_lex_words(
    int k, GenOrder order, int degree_limit = 6);

// Decompose an {h,t} word into maximal descending-consecutive-index runs;
// if the run starts and ends both increase strictly, report the final (j,i).
std::optional<std::pair<int, int>> end_run(const Word& w);
// Additionally forbids adjacent transapsis pairs inside a run.
bool in_run_form(const Word& w);
// All words g_j ... g_i with g_l in {h_l, t_l} and no adjacent transapsis
// pair; |Run(j,i)| = fibonacci(j-i+3).
std::vector<Word> run_set(int j, int i);

// Whitespace-separated letters ("h2 t1"); apsis letters as "a<m>_<i>";
// single-character aliases a..d,f,g and A..D,F,G for h1..h6 / t1..t6.
Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);
std::string letter_to_string(const Letter& l);

}  // namespace diagsemi
