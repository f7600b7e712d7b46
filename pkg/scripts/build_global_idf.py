#!/usr/bin/env python3
"""Regenerate src/faqkb/data/global-idf.tsv from a ranked word list.

The list below is ordered by approximate everyday-English frequency
(function words first, then common content words, then a commerce tail).
Zipf's law makes idf proportional to log rank, so each word gets
idf = ln(rank + 1). Words are folded to their lemma; when several
surface forms share a lemma the most frequent rank wins.
"""

from __future__ import annotations

import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from faqkb.textpipe import lemmatize  # noqa: E402

RANKED = """
the of and a to in is you that it he was for on are as with his they i
at be this have from or one had by word but not what all were we when
your can said there use an each which she do how their if will up
other about out many then them these so some her would make like him
into time has look two more write go see number no way could people
my than first water been call who oil its now find long down day did
get come made may part over new sound take only little work know
place year live me back give most very after thing our just name good
sentence man think say great where help through much before line
right too mean old any same tell boy follow came want show also
around form three small set put end does another well large must big
even such because turn here why ask went men read need land different
home us move try kind hand picture again change off play spell air
away animal house point page letter mother answer found study still
learn should world high every near add food between own below country
plant last school father keep tree never start city earth eye light
thought head under story saw left dont few while along might close
something seem next hard open example begin life always those both
paper together got group often run important until children side feet
car mile night walk white sea began grow took river four carry state
once book hear stop without second later miss idea enough eat face
watch far really almost let above girl sometimes mountain cut young
talk soon list song being leave family body music color stand sun
question fish area mark dog horse birds problem complete room knew
since ever piece told usually didnt friends easy heard order red door
sure become top ship across today during short better best however low
hours black products happened whole measure remember early waves
reached listen wind rock space covered fast several hold himself
toward five step morning passed vowel true hundred against pattern
numeral table north slowly money map farm pulled draw voice seen cold
cried plan notice south sing war ground fall king town unit figure
certain field travel wood fire upon done english road half ten fly
gave box finally wait correct oh quickly person became shown minutes
strong verb stars front feel fact inches street decided contain
course surface produce building ocean class note nothing rest
carefully scientists inside wheels stay green known island week less
machine base ago stood plane system behind ran round boat game force
brought understand warm common bring explain dry though language
shape deep thousands yes clear equation yet government filled heat
full hot check object am rule among noun power cannot able six size
dark ball material special heavy fine pair circle include built
cant matter square syllables perhaps bill felt suddenly test
direction center farmers ready anything divided general energy
subject europe moon region return believe dance members picked
simple cells paint mind love cause rain exercise eggs train blue
wish drop developed window difference distance heart sit sum summer
wall forest probably legs sat main winter wide written length reason
kept interest arms brother race present beautiful store job edge past
sign record finished discovered wild happy beside gone sky glass
million west lay weather root instruments meet third months paragraph
raised represent soft whether clothes flowers shall teacher held
describe drive cross speak solve appear metal son either ice sleep
village factors result jumped snow ride care floor hill pushed baby
buy century outside everything tall already instead phrase soil bed
copy free hope spring case laughed nation quite type themselves
temperature bright lead everyone method section lake consonant
within dictionary hair age amount scale pounds although per broken
moment tiny possible gold milk quiet natural lot stone act build
middle speed count cat someone sail rolled bear wonder smiled angle
fraction africa killed melody bottom trip hole poor lets fight
surprise french died beat exactly remain dress iron couldnt
fingers row least catch climbed wrote shouted continued itself else
plains gas england burning design joined foot law ears grass
youre grew skin valley cents key president brown trouble cool cloud
lost sent symbols wear bad save experiment engine alone drawing
east pay single touch information express mouth yard equal decimal
yourself control practice report straight rise statement stick
party seeds suppose woman coast bank period circle chance born level
triangle molecules france repeated column western church sister oxygen
plural various agreed opposite wrong chart prepared pretty solution
fresh shop suffix especially shoes actually nose afraid dead sugar
adjective fig office huge gun similar death score forward stretched
experience rose allow fear workers washington greek women bought led
march northern sense cattle million anyone rubbed noise angry nearby
silent properly stated process supply corner electric insects crops
tone hit sand doctor provide thus wont cook bones tail board modern
chief japanese stream planets rhythm eight science major observe tube
necessary weight meat lifted process army hat property particular
swim terms current park sell shoulder industry wash block spread
cattle wife sharp company radio we're action capital factories
settled yellow isnt southern truck fair printed wouldnt ahead
separate break uncle hunting flow lady students human art feeling
""".split()

COMMERCE_TAIL = """
account delivery payment refund policy warranty shipping shipment
purchase customer service support contact email address invoice
receipt discount coupon voucher price cost charge fee tax total
checkout cart item stock inventory availability cancel cancellation
exchange track tracking package parcel courier deposit
subscription membership login password username profile settings
browser website online catalog brochure assembly instructions manual
guide furniture chair sofa couch desk cabinet shelf wardrobe dresser
mattress pillow cushion lamp bench stool oak pine steel leather
plastic fabric wholesale retail bulk quantity minimum maximum
standard express international domestic region zone warehouse
showroom pickup collection damaged defective replacement repair
maintenance installation measurement dimensions width height depth
custom customize personalize engrave gift wrap promotional seasonal
clearance bargain
""".split()


def main() -> None:
    out_path = Path(__file__).resolve().parents[1] / "src" / "faqkb" / "data" / "global-idf.tsv"
    table: dict[str, float] = {}
    rank = 0
    for word in RANKED + COMMERCE_TAIL:
        if not word.isascii() or not word.isalpha():
            continue
        rank += 1
        lemma = lemmatize(word.lower())
        idf = math.log(rank + 1)
        if lemma not in table:
            table[lemma] = idf
    lines = [f"{word}\t{idf:.6f}" for word, idf in sorted(table.items())]
    out_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} entries to {out_path}")


if __name__ == "__main__":
    main()
