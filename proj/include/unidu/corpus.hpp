#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace unidu {

enum class Task { DS, DC, SF, ID, DST };
enum class Speaker { USER, SYSTEM };
enum class CorpusRole { EVAL, AUX };
enum class Split { TRAIN, DEV, TEST };

inline constexpr Task kAllTasks[] = {Task::DS, Task::DC, Task::SF, Task::ID, Task::DST};

const char* to_string(Task t);
const char* to_string(Speaker s);
const char* to_string(CorpusRole r);
const char* to_string(Split s);
Task task_from_string(const std::string& s);
Speaker speaker_from_string(const std::string& s);
CorpusRole role_from_string(const std::string& s);
Split split_from_string(const std::string& s);

struct Turn {
    Speaker speaker = Speaker::USER;
    std::string text;
    bool operator==(const Turn&) const = default;
};

struct SlotAnnotation {
    std::string domain;
    std::string slot;
    std::vector<std::string> values;
    bool operator==(const SlotAnnotation&) const = default;
};

struct IntentAnnotation {
    std::string domain;
    std::string intent;
    bool operator==(const IntentAnnotation&) const = default;
};

struct StateTriple {
    std::string domain;
    std::string slot;
    std::string value;
    auto operator<=>(const StateTriple&) const = default;
};

using StateSet = std::set<StateTriple>;

// Per-task payloads keyed by turn index where the task is turn-scoped.
struct Annotations {
    std::optional<std::string> summary;                   // DS
    std::map<int, std::string> rewrites;                  // DC
    std::map<int, std::vector<SlotAnnotation>> slots;     // SF
    std::map<int, IntentAnnotation> intents;              // ID
    std::map<int, StateSet> states;                       // DST, cumulative per turn
    bool operator==(const Annotations&) const = default;
};

struct Dialogue {
    std::string id;
    std::vector<Turn> turns;
    Annotations annotations;
    bool operator==(const Dialogue&) const = default;
};

struct DomainSpec {
    std::string name;
    std::vector<std::string> slots;
    std::vector<std::string> intents;
    bool operator==(const DomainSpec&) const = default;
};

struct Ontology {
    std::vector<DomainSpec> domains;
    bool operator==(const Ontology&) const = default;

    const DomainSpec* find(const std::string& domain) const;
    bool has_slot(const std::string& domain, const std::string& slot) const;
    bool has_intent(const std::string& domain, const std::string& intent) const;
    bool empty() const { return domains.empty(); }
};

struct Corpus {
    std::string name;
    Task task = Task::DS;
    CorpusRole role = CorpusRole::EVAL;
    Split split = Split::TRAIN;
    Ontology ontology;
    std::vector<Dialogue> dialogues;
    bool operator==(const Corpus&) const = default;
};

class SchemaError : public std::runtime_error {
  public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Violations are data, not errors: empty list iff every invariant holds.
std::vector<std::string> validate_dialogue(const Dialogue& d, const Ontology& o, Task task);
std::vector<std::string> validate_corpus(const Corpus& c);

Corpus parse_corpus_json(const std::string& text);
std::string corpus_to_json(const Corpus& c);
Corpus load_corpus(const std::string& path, std::optional<Task> expected_task = std::nullopt);
void save_corpus(const Corpus& c, const std::string& path);

struct OntologySize {
    int domains = 1;
    int slots_per_domain = 1;
    int intents_per_domain = 1;
};

// Deterministic templated corpora for desk-scale experiments. Pure function
// of its arguments: slot values are verbatim substrings of their utterance,
// DST states accumulate monotonically across turns.
Corpus generate_synthetic_corpus(std::uint64_t seed, Task task, int n_dialogues,
                                 OntologySize size = {});

}  // namespace unidu
