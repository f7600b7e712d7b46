#!/usr/bin/env python3
"""Author the bundled sample KB and its labeled query set.

Every labeled query is a paraphrase written against one specific QA, so
relevance labels are known by construction: the source QA gets label 1 and
the query's hardest retrieval confusions get label 0. Writes
src/faqkb/data/sample-kb.json and src/faqkb/data/sample-labels.tsv.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from faqkb.index import build_index, retrieve
from faqkb.kb import KnowledgeBase, QAPair, serialize_kb, validate_kb

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "faqkb" / "data"

# question, alternates, answer, parent (question text or None), label paraphrases
CORPUS = [
    ("What sizes does the Marlow sofa come in?",
     ("marlow sofa sizes",),
     "The Marlow sofa comes as a two seater, a three seater, and a corner unit.",
     None,
     ("is there a three seater marlow", "marlow couch size options",
      "what seat counts does the marlow offer")),
    ("What colors are available for the Marlow sofa?",
     (),
     "Marlow covers come in slate gray, forest green, and sand beige.",
     None,
     ("available colors for the marlow sofa", "what colors does the marlow come in")),
    ("Can the Marlow sofa covers be washed?",
     ("washable covers",),
     "Yes, all Marlow covers zip off and machine wash at thirty degrees.",
     None,
     ("how do i wash the marlow covers", "are the sofa covers machine washable")),
    ("How big is the Harper dining table?",
     ("harper table dimensions",),
     "The Harper table is 180 by 90 centimeters and seats six people.",
     None,
     ("harper table measurements", "how many people fit at the harper table")),
    ("Is the Harper table extendable?",
     (),
     "The Harper table extends to 230 centimeters with the built in leaf.",
     None,
     ("is the harper dining table extendable", "harper table extension leaf")),
    ("What wood is the Harper table made from?",
     (),
     "The Harper table top is solid oak on a powder coated steel base.",
     None,
     ("what wood is the harper table built from", "what is the harper table made of")),
    ("How firm is the Nimbus mattress?",
     ("nimbus firmness",),
     "The Nimbus mattress is medium firm, rated six of ten.",
     None,
     ("is the nimbus mattress hard or soft", "nimbus mattress firmness rating")),
    ("Does the Nimbus mattress have a trial period?",
     ("mattress trial",),
     "You can sleep on the Nimbus for one hundred nights and return it if unsatisfied.",
     None,
     ("nimbus hundred night trial", "can i test the mattress at home")),
    ("What bed frames fit the Nimbus mattress?",
     (),
     "The Nimbus fits any standard queen frame, including all our slatted bases.",
     None,
     ("which frame works with the nimbus", "which bed frames fit the nimbus")),
    ("How much weight can the Atlas bookcase hold?",
     ("atlas shelf capacity",),
     "Each Atlas shelf holds thirty kilograms when wall anchored.",
     None,
     ("atlas bookcase weight limit", "how many kilos per atlas shelf")),
    ("Does the Atlas bookcase need to be anchored to the wall?",
     (),
     "Yes, the Atlas ships with an anchor kit and must be fixed to the wall.",
     None,
     ("is wall anchoring required for the atlas", "is the atlas wall anchor kit required")),
    ("What lengths do the Vela curtains come in?",
     ("vela curtain lengths",),
     "Vela curtains come in 200, 250, and 300 centimeter drops.",
     None,
     ("how long are the vela curtains", "vela curtain drop options")),
    ("Do the Vela curtains block out light?",
     ("blackout curtains",),
     "The Vela blackout lining blocks about ninety five percent of light.",
     None,
     ("are vela curtains blackout", "do the curtains block out the light")),
    ("How do I clean the Kora wool rug?",
     ("rug cleaning",),
     "Vacuum the Kora weekly and blot spills immediately; professional clean yearly.",
     None,
     ("kora rug care instructions", "how do i clean a spill on the kora rug")),
    ("Is the Kora rug suitable for underfloor heating?",
     (),
     "Yes, the Kora rug is rated for underfloor heating up to 27 degrees.",
     None,
     ("can i put the kora over heated floors", "kora rug underfloor heating")),
    ("What bulbs does the Lumen floor lamp take?",
     ("lumen lamp bulb",),
     "The Lumen takes one E27 bulb up to twelve watts LED.",
     None,
     ("which bulb fits the lumen lamp", "lumen floor lamp bulb type")),
    ("Is the Lumen lamp dimmable?",
     (),
     "The Lumen dims through its foot switch when fitted with a dimmable bulb.",
     None,
     ("can the lumen lamp be dimmed", "is the lumen floor lamp dimmable")),
    ("How long does standard delivery take?",
     ("delivery estimate",),
     "Standard delivery arrives in four to six working days.",
     None,
     ("how long does delivery usually take", "standard shipping lead time",
      "usual delivery duration")),
    ("Do you offer next day delivery?",
     ("express delivery",),
     "Next day delivery is available for in stock items ordered before noon.",
     None,
     ("do you do next day delivery", "express delivery cutoff time")),
    ("Do you deliver to apartments without elevators?",
     ("stairs delivery",),
     "Yes, two person delivery carries items up to the fifth floor without an elevator.",
     None,
     ("do you deliver to apartments with stairs", "delivery to an apartment without an elevator")),
    ("Can I choose a delivery time slot?",
     (),
     "You pick a morning or afternoon slot at checkout and get a call the day before.",
     None,
     ("pick a delivery slot at checkout", "choose when the delivery comes")),
    ("Do you take away old furniture on delivery?",
     ("old furniture removal",),
     "For a small fee the delivery team removes one old item per new item delivered.",
     None,
     ("can you take away my old furniture", "old sofa removal service")),
    ("How do I return a flat pack item?",
     ("flat pack return",),
     "Unassembled flat packs return free within forty five days in original packaging.",
     None,
     ("return an unopened flat pack", "return a flat pack in original packaging")),
    ("Can I return assembled furniture?",
     (),
     "Assembled items can be returned within fourteen days with a twenty percent restocking fee.",
     None,
     ("return policy for built furniture", "can i return furniture i already assembled")),
    ("How long do refunds take to process?",
     ("refund timing",),
     "Refunds reach your account within ten days of the item arriving back at our warehouse.",
     None,
     ("how long until my refund is processed", "refund processing duration",
      "when will i get refunded")),
    ("What proof of purchase do I need for a return?",
     (),
     "The order confirmation email or the paper receipt both work as proof of purchase.",
     None,
     ("do i need the receipt to return", "what counts as proof of purchase for a return")),
    ("Does the furniture come with a guarantee?",
     ("product guarantee",),
     "All furniture carries a ten year structural guarantee; fabrics carry two years.",
     None,
     ("how long is the furniture guaranteed", "is there a guarantee on the furniture",
      "years of guarantee coverage")),
    ("What voids the product guarantee?",
     (),
     "Commercial use, outdoor storage, and unauthorized repairs void the guarantee.",
     None,
     ("which repairs void the guarantee", "does outdoor use void the guarantee")),
    ("How do I claim under the guarantee?",
     ("guarantee claim",),
     "Email photos and your order number; claims are assessed within three working days.",
     None,
     ("start a guarantee claim", "my frame broke how do i claim")),
    ("Are spare fittings available for flat packs?",
     ("spare fittings",),
     "Spare cam locks, dowels, and screws ship free; quote the part number from the manual.",
     None,
     ("can i get spare screws and cam locks", "order spare dowels")),
    ("Can I download assembly manuals?",
     ("assembly manual download",),
     "Every product page has a PDF manual under the documents tab.",
     None,
     ("where do i download the assembly manual", "find the product assembly manual pdf")),
    ("Do you sell replacement sofa legs?",
     (),
     "Replacement legs in wood or metal fit all our sofa models and ship in pairs.",
     None,
     ("buy replacement legs for my sofa", "replacement feet for the sofa")),
    ("How do I book a design consultation?",
     ("design consultation",),
     "Book a free forty five minute consultation online or at any store desk.",
     None,
     ("schedule a session with a designer", "free interior design appointment")),
    ("Is there a fee for the design service?",
     (),
     "The first consultation is free; full room plans cost ninety dollars, refunded on purchase.",
     None,
     ("how much does the design service cost", "what does a full room design plan cost")),
    ("Do you offer a student discount?",
     ("student discount",),
     "Students get ten percent off with a verified student email address.",
     None,
     ("is there a discount for students", "student offer verification",
      "percent off for student email")),
    ("When are the seasonal sales?",
     ("sale dates",),
     "Big sales run in January and July, with member previews a week early.",
     None,
     ("when is the next big sale", "dates of the summer sale")),
    ("How do I check a gift card balance?",
     ("gift card balance",),
     "Check your balance on the gift card page using the sixteen digit code.",
     None,
     ("how much is left on my gift card", "gift card remaining amount")),
    ("Do gift cards expire?",
     (),
     "Gift cards stay valid for five years from the purchase date.",
     None,
     ("gift card expiry period", "how many years are gift cards valid")),
    ("How do I create an account?",
     ("sign up",),
     "Press sign up, confirm your email, and your account is ready to use.",
     None,
     ("register a new account", "steps to sign up on the site",
      "open an account with my email")),
    ("How do I view my order history?",
     ("order history",),
     "Your account page lists every order with its status and documents.",
     None,
     ("where can i view my order history", "find my order history in my account")),
    ("Can I save items to a wish list?",
     ("wish list",),
     "Press the heart icon on any product to save it to your wish list.",
     None,
     ("how do wish lists work", "save a product for later")),
    ("Is my payment information stored securely?",
     ("payment security",),
     "Card details are tokenized by our payment processor and never stored on our servers.",
     None,
     ("are my card details stored securely", "how is my payment information stored")),
    ("Where does the showroom furniture come from?",
     ("floor models",),
     "Showroom pieces are production stock; ex display items sell at a discount quarterly.",
     None,
     ("can i buy the display model", "can i buy showroom floor models")),
    ("Can I reserve an item before visiting a store?",
     ("reserve in store",),
     "Reserve online and the store holds the item at the collection desk for two days.",
     None,
     ("hold an item for me at the shop", "reserve before i come in")),
    ("Do you have parking at your stores?",
     ("store parking",),
     "Every store has free customer parking including trailer spaces for pickups.",
     None,
     ("is parking free at the store", "can i park a trailer at the shop")),
    # multi-turn cluster: parent prompt with two children
    ("Know about XYZ",
     ("what is xyz",),
     "XYZ is our modular shelving system built from steel frames and oak boards. "
     "Do you want to know about XYZ?",
     None,
     ("know about xyz", "tell me about the xyz system")),
    ("Yes",
     ("yes please", "sure"),
     "XYZ lets you combine frames, boards, and doors into any layout, and every part "
     "is replaceable on its own.",
     "Know about XYZ",
     ()),
    ("Benefits",
     ("xyz benefits",),
     "XYZ benefits include tool free assembly, reconfigurable layouts, and a lifetime "
     "guarantee on the frames.",
     "Know about XYZ",
     ("benefits of xyz", "main benefits of the xyz range")),
]

NEGATIVES_PER_QUERY = 2


def build_kb() -> KnowledgeBase:
    pairs = []
    id_of = {}
    for next_id, (question, alternates, answer, parent, _) in enumerate(CORPUS, start=1):
        parent_id = id_of[parent] if parent else None
        pairs.append(QAPair(
            id=next_id, question=question, answer=answer,
            alternate_questions=tuple(alternates), parent_id=parent_id,
            source="editorial",
        ))
        id_of[question] = next_id
    kb = KnowledgeBase.build(kb_id="sample", name="Home goods sample KB", qa_pairs=pairs)
    problems = validate_kb(kb)
    if problems:
        raise SystemExit(f"sample KB invalid: {problems}")
    return kb


def build_labels(kb: KnowledgeBase) -> list[str]:
    index = build_index(kb)
    id_of = {question: qa_id for qa_id, (question, *_) in enumerate(CORPUS, start=1)}
    lines = ["# query <TAB> qaId <TAB> label; authored per QA, negatives from retrieval pool"]
    count = 0
    for question, _, _, _, paraphrases in CORPUS:
        source_id = id_of[question]
        for query in paraphrases:
            count += 1
            lines.append(f"{query}\t{source_id}\t1")
            hits = retrieve(index, kb.tokenize_query(query), k=NEGATIVES_PER_QUERY + 1)
            negatives = [h.qa_id for h in hits if h.qa_id != source_id]
            others = [qa.id for qa in kb.qa_pairs if qa.id != source_id and qa.id not in negatives]
            for qa_id in (negatives + others)[:NEGATIVES_PER_QUERY]:
                lines.append(f"{query}\t{qa_id}\t0")
    print(f"authored {count} queries")
    if count != 100:
        raise SystemExit(f"expected exactly 100 queries, got {count}")
    return lines


def main() -> int:
    kb = build_kb()
    print(f"sample KB: {len(kb.qa_pairs)} QA pairs")
    (DATA_DIR / "sample-kb.json").write_text(serialize_kb(kb), encoding="utf-8")
    labels = build_labels(kb)
    (DATA_DIR / "sample-labels.tsv").write_text("\n".join(labels) + "\n", encoding="utf-8")
    print(f"wrote {DATA_DIR / 'sample-kb.json'}")
    print(f"wrote {DATA_DIR / 'sample-labels.tsv'}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
