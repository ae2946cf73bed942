#include <string_view>

#include "i3rab/converter.hpp"

namespace i3rab::converter {

// Mirrors data/default.rules; a test keeps the two in sync.
std::string_view default_rules_text() {
  static constexpr std::string_view kText = R"RULES(# I3rab default conversion rules for PADT-style input.
#
# Label map keys, most specific first:
#   Label/C   dependent coarse POS is C
#   Label^C   head coarse POS is C
#   */C, *^C  any label
#   Label
# Labels already in the schema pass through unchanged.

[label_map]
Sb -> AGENT
Obj -> OBJ
Atr -> GEN
Atr/A -> ADJ
Adv -> ADVP
*^P -> GEN
AuxP -> P
Pred -> PRED-NOUN
Pnom -> PRED-NOUN
Atv -> HAAL
AuxK -> END
AuxX -> COMMA
AuxG -> PUNCT
Coord -> COORD
Apos -> ALTER
AuxM -> NEG
AuxC -> P
AuxY -> P

# merge: FORM            join FORM with the next token
# delete [@N]: FORM      drop FORM (only in sentence N when scoped)
# split [@N]: FORM -> a/TAG + b/TAG
[fix_list]
merge: ال

[options]
insert_covert = true
detach_joined = true
jussive_label = NEG
accusative_label = P-ACC
)RULES";
  return kText;
}

}  // namespace i3rab::converter
