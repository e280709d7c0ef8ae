#include "synsim/tagger.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "synsim/errors.hpp"

namespace synsim {

namespace {

// ~600 common English verbs, base form.
constexpr const char* kVerbs =
    "accept achieve acquire act adapt add address adjust admire admit adopt advise affect afford agree aim "
    "allow alter amend analyse analyze announce annoy answer apologise apologize appear apply appoint "
    "appreciate approach approve argue arise arrange arrest arrive ask assemble assess assign assist assume "
    "assure attach attack attempt attend attract avoid award bake balance ban bark base bat bathe battle be "
    "bear beat become beg begin behave believe belong bend bet bid bind bite blame bleed bless blow boil bomb "
    "book border borrow bother bounce bow break breathe breed bring broadcast brush build burn burst bury buy "
    "calculate call campaign cancel capture care carry carve cast catch cause celebrate challenge change "
    "charge chase chat check cheer chew choose chop claim clap classify clean clear climb cling close coach "
    "collapse collect combine come comfort command comment commit communicate compare compete compile "
    "complain complete compose comprise concentrate concern conclude conduct confess confirm confront "
    "confuse connect consider consist construct consult consume contact contain continue contribute control "
    "convert convince cook cope copy correct cost cough count cover crack crash crawl create creep criticise "
    "criticize cross crush cry cure curl cut damage dance dare deal debate decide declare decline decorate "
    "decrease dedicate defeat defend define delay delete deliver demand demonstrate deny depart depend "
    "describe deserve design destroy detect determine develop devote die dig direct disagree disappear "
    "discover discuss dislike dismiss display dissolve distribute dive divide do donate double doubt drag "
    "draw dream dress drink drive drop drown dry earn eat educate elect eliminate embrace emerge emphasise "
    "employ enable encounter encourage end endure enforce engage enhance enjoy enrol ensure enter entertain "
    "escape establish estimate evaluate examine exceed exchange excite exclude excuse execute exercise exhibit "
    "exist expand expect experience explain explode explore export expose express extend face fail fall "
    "fasten fear feed feel fetch fight file fill film find finish fire fit fix flee float flood flow fly fold "
    "follow forbid force forecast forget forgive form found frame freeze frighten fry fund gain gather "
    "generate get give glance glow go govern grab graduate grant greet grind grip grow guarantee guard guess "
    "guide hammer hand handle hang happen harm hate have head hear heat help hide hire hit hold hope host "
    "hunt hurry hurt identify ignore illustrate imagine implement imply import impose impress improve include "
    "increase indicate influence inform inherit injure insert insist inspect inspire install instruct "
    "intend interest interpret interrupt introduce invent invest investigate invite involve iron issue join "
    "joke judge jump justify keep kick kill kiss kneel knit knock know label land last laugh launch lay lead "
    "lean leap learn leave lend let lie lift light like limit link list listen live load locate lock long "
    "look lose love lower maintain make manage manufacture march mark marry match matter mean measure meet "
    "melt mention merge migrate mind miss mix modify monitor move multiply murder name need neglect negotiate "
    "nod note notice notify number obey object oblige observe obtain occupy occur offend offer open operate "
    "oppose order organise organize originate overcome owe own pack paint park participate pass pause pay "
    "perceive perform permit persuade phone pick pin place plan plant play plead please plug point polish "
    "pollute possess post pour practise practice praise pray precede predict prefer prepare present preserve "
    "press presume pretend prevent print proceed process produce progress prohibit promise promote pronounce "
    "propose protect protest prove provide publish pull pump punch punish purchase pursue push put qualify "
    "question queue quit quote race rain raise range reach react read realise realize receive recognise "
    "recognize recommend record recover recruit reduce refer reflect refuse regard register regret reign "
    "reject relate relax release rely remain remember remind remove renew rent repair repeat replace reply "
    "report represent request require rescue research reserve resign resist resolve respect respond rest "
    "restore restrict result retain retire return reveal review reward ride ring rise risk roll rub ruin rule "
    "run rush sail satisfy save saw say scan scare schedule score scratch scream search secure see seek seem "
    "select sell send sense separate serve set settle sew shake shape share shave shed shine shoot shop shout "
    "show shut sign signal sing sink sit ski skip sleep slide slip smell smile smoke snap sneeze solve sort "
    "sound speak specialise specialize speed spell spend spill spin spit split spoil sponsor spread squeeze "
    "stand stare start state stay steal steer step stick sting stir stop store strengthen stress stretch "
    "strike struggle study submit succeed suck suffer suggest suit supply support suppose surprise surround "
    "survive suspect swallow swear sweep swim swing switch talk taste teach tear tease tell tempt tend test "
    "thank think threaten throw tick tie tip title tolerate touch tour trace trade train transfer transform "
    "translate transport trap travel treat tremble trust try turn twist type understand undergo undertake "
    "unite unlock update upgrade urge use vanish vary visit vote wait wake walk wander want warm warn wash "
    "waste watch water wave wear weigh welcome whisper win wind wish withdraw wonder work worry wrap write "
    "yawn yell yield zoom";

// Irregular past and participle forms.
constexpr const char* kIrregular =
    "arose arisen ate eaten became began begun bent bit bitten bled blew blown broke broken brought built "
    "burnt bought caught chose chosen came clung crept dealt did done dug drew drawn dreamt drank drunk drove "
    "driven fell fallen fed felt fought found fled flew flown forbade forbidden forgot forgotten forgave "
    "forgiven froze frozen got gotten gave given went gone grew grown hung heard hid hidden held kept knelt "
    "knew known laid led leapt learnt left lent lay lain lit lost made meant met paid ran rang rung rode "
    "ridden rose risen said sank sunk saw seen sought sold sent shook shaken shone shot showed shown sang "
    "sung sat slept slid spoke spoken spent spun stood stole stolen stuck stung struck swore sworn swept "
    "swam swum swung took taken taught tore torn told thought threw thrown understood undertook undertaken "
    "woke woken wore worn wept won wound wrote written";

const std::unordered_map<std::string, std::string>& closed_class() {
  static const auto table = [] {
    std::unordered_map<std::string, std::string> t;
    auto add = [&t](const char* words, const char* tag) {
      std::istringstream in(words);
      std::string w;
      while (in >> w) t.emplace(w, tag);
    };
    add("the a an this these those every each another either neither", "DET");
    add("and or but nor yet", "CCONJ");
    add("because although though whereas unless whether if while", "SCONJ");
    add("i you he she it we they me him her us them myself yourself himself herself itself ourselves "
        "themselves who whom which what that something anything nothing everything someone anyone",
        "PRON");
    add("my your his its our their whose", "DET");
    add("be am is are was were been being have has had do does did will would shall should can could may "
        "might must",
        "AUX");
    add("of in on at by for with from to into onto about above below between through during under over "
        "without within among across against along around behind beyond near upon via toward towards than "
        "as after before since until like per",
        "ADP");
    add("not n't 's", "PART");
    add("very too also just only now then here there never always often still already soon again so",
        "ADV");
    return t;
  }();
  return table;
}

const std::unordered_set<std::string>& verb_forms() {
  static const auto set = [] {
    std::unordered_set<std::string> s;
    for (const char* list : {kVerbs, kIrregular}) {
      std::istringstream in(list);
      std::string w;
      while (in >> w) s.insert(w);
    }
    return s;
  }();
  return set;
}

bool is_base_verb(const std::string& w) {
  static const auto base = [] {
    std::unordered_set<std::string> s;
    std::istringstream in(kVerbs);
    std::string v;
    while (in >> v) s.insert(v);
    return s;
  }();
  return base.count(w) != 0;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// True if `w` is an -s, -ed or -ing inflection of a listed base verb.
bool inflected_verb(const std::string& w) {
  auto try_stem = [](std::string stem) { return !stem.empty() && is_base_verb(stem); };
  if (ends_with(w, "ies") && try_stem(w.substr(0, w.size() - 3) + "y")) return true;
  if (ends_with(w, "es") && try_stem(w.substr(0, w.size() - 2))) return true;
  if (ends_with(w, "s") && try_stem(w.substr(0, w.size() - 1))) return true;
  if (ends_with(w, "ied") && try_stem(w.substr(0, w.size() - 3) + "y")) return true;
  if (ends_with(w, "ed")) {
    auto stem = w.substr(0, w.size() - 2);
    if (try_stem(stem) || try_stem(stem + "e")) return true;
    if (stem.size() > 2 && stem.back() == stem[stem.size() - 2] && try_stem(stem.substr(0, stem.size() - 1)))
      return true;
  }
  if (ends_with(w, "ing")) {
    auto stem = w.substr(0, w.size() - 3);
    if (try_stem(stem) || try_stem(stem + "e")) return true;
    if (stem.size() > 2 && stem.back() == stem[stem.size() - 2] && try_stem(stem.substr(0, stem.size() - 1)))
      return true;
  }
  return false;
}

bool is_number(std::string_view w) {
  bool digit = false;
  for (unsigned char c : w) {
    if (std::isdigit(c)) digit = true;
    else if (c != '.' && c != ',' && c != '-' && c != '/') return false;
  }
  return digit;
}

bool all_punct(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](unsigned char c) { return std::ispunct(c) != 0; });
}

std::string tag_word(const std::string& form, std::size_t position, const std::string& previous_tag) {
  if (all_punct(form)) return "PUNCT";
  if (is_number(form)) return "NUM";
  const std::string w = to_lower(form);
  if (auto it = closed_class().find(w); it != closed_class().end()) return it->second;
  const bool after_nominal_marker = previous_tag == "DET" || previous_tag == "ADP" || previous_tag == "ADJ";
  if (is_base_verb(w) || inflected_verb(w)) {
    if (after_nominal_marker && !ends_with(w, "ed") && !ends_with(w, "ing")) return "NOUN";
    return "VERB";
  }
  if (verb_forms().count(w) != 0) return "VERB";
  if (w.size() > 4 && (ends_with(w, "ing") || ends_with(w, "ed"))) return after_nominal_marker ? "ADJ" : "VERB";
  if (w.size() > 3 && ends_with(w, "ly")) return "ADV";
  if (position > 0 && std::isupper(static_cast<unsigned char>(form.front()))) return "PROPN";
  return "NOUN";
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  static constexpr std::string_view kLead = "\"'([{`";
  static constexpr std::string_view kTrail = "\"'.,;:!?)]}";
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string chunk;
  while (in >> chunk) {
    std::string_view c = chunk;
    while (c.size() > 1 && kLead.find(c.front()) != std::string_view::npos) {
      out.emplace_back(1, c.front());
      c.remove_prefix(1);
    }
    std::vector<std::string> tail;
    while (c.size() > 1 && kTrail.find(c.back()) != std::string_view::npos) {
      tail.emplace_back(1, c.back());
      c.remove_suffix(1);
    }
    if (c.size() > 3 && (ends_with(c, "n't") || ends_with(c, "N'T"))) {
      out.emplace_back(c.substr(0, c.size() - 3));
      out.emplace_back(c.substr(c.size() - 3));
    } else if (c.size() > 2 && (ends_with(c, "'s") || ends_with(c, "'S"))) {
      out.emplace_back(c.substr(0, c.size() - 2));
      out.emplace_back(c.substr(c.size() - 2));
    } else if (!c.empty()) {
      out.emplace_back(c);
    }
    out.insert(out.end(), tail.rbegin(), tail.rend());
  }
  return out;
}

ParsedSentence tag_plain_text(std::string_view text, const StopWordList& stops) {
  auto forms = tokenize(text);
  if (forms.empty()) throw EmptyInputError();

  ParsedSentence s;
  s.text = std::string(text);
  s.heuristic = true;
  std::string previous;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    Token t;
    t.index = static_cast<int>(i) + 1;
    t.form = forms[i];
    t.lemma = to_lower(forms[i]);
    t.upos = tag_word(forms[i], i, previous);
    previous = t.upos;
    s.tokens.push_back(std::move(t));
  }

  int root = 0;
  for (const auto& t : s.tokens)
    if (t.upos == "VERB") {
      root = t.index;
      break;
    }
  if (root == 0)
    for (const auto& t : s.tokens)
      if (t.upos != "PUNCT") {
        root = t.index;
        break;
      }
  if (root == 0) root = 1;

  for (auto& t : s.tokens) {
    if (t.index == root) {
      t.head = 0;
      t.deprel = "ROOT";
      continue;
    }
    t.head = root;
    t.deprel = t.upos == "CCONJ" ? "CC" : t.upos == "PUNCT" ? "PUNCT" : "DEP";
  }
  return mark_stopwords(std::move(s), stops);
}

}  // namespace synsim
