#include <string_view>

#include "i3rab/schema.hpp"

namespace i3rab::schema {

// Mirrors data/default.schema; a test keeps the two in sync.
std::string_view default_schema_text() {
  static constexpr std::string_view kText = R"SCHEMA(# I3rab default schema.
#
# Sections replace the built-in defaults wholesale when present.

[labels]
ADJ
ADVP
AGENT
ALTER
COMMA
COND
COORD
END
EXCEPT
GEN
HAAL
MA3TOUF
NEG
OBJ
P
P-ACC
PART
PRED-ADVP
PRED-NOUN
PRED-NP
PRED-PP
PRED-VP
PREDX-ADVP
PREDX-NOUN
PREDX-NP
PREDX-PP
PREDX-VP
PUNCT
TAMYEEZ
TAWKEED
TOPIC
TOPICX
VB
VBX

[label_aliases]
SUBJ -> TOPIC
PRED -> PRED-PP

[pos]
VI
VP
VC
N-
A-
D-
C-
P-
I-
G-
Q-
Y-
F-
FN
FI
S-
SD
SR
--
Z-

[feats]
Mood = I,S,J,D
Voice = A,P
Person = 1,2,3
Gender = M,F
Number = S,D,P
Case = 1,2,4
Defin = I,D,R,C
Covert = Y

[kana_sisters]
كان
أصبح
أمسى
أضحى
ظل
بات
صار
ليس
مازال
مابرح
مافتئ
ماانفك
مادام

[inna_sisters]
إن
أن
كأن
لكن
ليت
لعل

[jussive]
لم
لما

[accusative_particles]
لن
أن
كي
لكي

# suffix -> person,gender,number,pronoun ("*" = any, "a|b" = either)
[joined_nominative_suffixes]
ون -> 3|2,M,P,هم
ان -> 3|2,*,D,هما
نا -> 1,*,P,نحن
ن -> 3|2,F,P,هن
ت -> 1|2,*,S,أنا
ي -> 2,F,S,أنت

[covert_pronouns]
1,*,S -> أنا
1,*,P -> نحن
3,M,S -> هو
3,F,S -> هي
2,M,S -> أنت

# fused -> part + part; "/TAG" sets a part's POS tag
[split_lexicon]
حسبما -> حسب/N- + ما/SR
مثلما -> مثل/N- + ما/SR
عندما -> عند/N- + ما/SR
بينما -> بين/N- + ما/SR
بالسارس -> ب/P- + السارس/Z-
وهواتيان -> و/C- + هواتيان/Z-

[punctuation_pos]
G-
)SCHEMA";
  return kText;
}

}  // namespace i3rab::schema
