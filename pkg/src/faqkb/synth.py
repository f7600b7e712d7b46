"""Synthetic FAQ corpus generator for training the bundled default ranker.

The default model has to work on knowledge bases it has never seen, so the
features it learns from must be the generic similarity signals, not any
particular KB's wording. This module fabricates a store-support corpus with
paraphrased queries (word drops, synonym swaps, typos) and labels every
(query, QA) row by construction: the QA a query was derived from is
relevant, sampled others are not. Multi-turn follow-up rows teach the
contextual features.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .features import FeatureExtractor, load_global_idf, load_taxonomy
from .index import build_index, retrieve
from .kb import KnowledgeBase, QAPair, QueryContext
from .ranker import TrainingRow, TrainingSet

# question, alternate questions, answer, query paraphrases
_TOPICS = (
    ("How do I place an order?",
     ("how to order", "placing an order"),
     "Add items to your cart and press checkout. You will get an order number by email.",
     ("how can i place an order", "i want to order something", "help me order an item",
      "what are the steps to order")),
    ("How do I cancel my order?",
     ("cancel order", "order cancellation"),
     "Orders can be cancelled from your account page until they ship.",
     ("cancel my order please", "how to cancel an order i made", "can i still cancel",
      "i need to cancel the order")),
    ("How do I change my delivery address?",
     ("update shipping address",),
     "Open the order in your account and edit the address before dispatch.",
     ("change the address on my order", "update my delivery address",
      "ship to a different address", "wrong address on order")),
    ("What payment methods are accepted?",
     ("payment options", "ways to pay"),
     "We accept major cards, bank transfer, and cash on pickup.",
     ("which payment methods can i use", "how can i pay for my order",
      "do you take bank transfer", "accepted ways of paying")),
    ("Can I pay with a gift voucher?",
     ("gift card payment",),
     "Gift vouchers apply at checkout; any remainder stays on the voucher.",
     ("pay using a gift voucher", "how do gift cards work at checkout",
      "can i use my voucher", "redeem a gift voucher")),
    ("When will my invoice arrive?",
     ("invoice timing",),
     "Invoices are emailed within one hour of payment.",
     ("where is my invoice", "i did not get an invoice",
      "when do you send invoices", "need a copy of my invoice")),
    ("How long does delivery take?",
     ("delivery time", "shipping duration"),
     "Standard delivery takes three to five business days.",
     ("how many days for delivery", "when will my package arrive",
      "how long is shipping", "delivery duration estimate")),
    ("How much does shipping cost?",
     ("shipping fee", "delivery charge"),
     "Shipping costs five dollars, free on orders over fifty dollars.",
     ("what is the delivery fee", "price of shipping",
      "do i pay for delivery", "shipping charges")),
    ("Do you ship internationally?",
     ("international delivery",),
     "Yes, international shipping is available to most countries by courier.",
     ("can you deliver abroad", "do you send orders overseas",
      "international shipping options", "ship outside the country")),
    ("How do I track my shipment?",
     ("track order", "tracking number"),
     "Use the tracking link in your dispatch email to follow the shipment.",
     ("where is my shipment", "track my package",
      "how to follow my delivery", "tracking link not working")),
    ("What is your return policy?",
     ("returns", "return rules"),
     "Unused items can be returned within thirty days for a full refund.",
     ("can i return an item", "how do returns work",
      "rules for returning products", "return window length")),
    ("How do I get a refund?",
     ("refund process",),
     "Refunds are issued to the original payment method within five days of the return arriving.",
     ("when do i get my money back", "refund my purchase",
      "how long until the refund arrives", "i want a refund")),
    ("Can I exchange an item?",
     ("exchanges",),
     "Exchanges are handled as a return plus a new order.",
     ("swap an item for another", "how to exchange a product",
      "exchange for a different size", "can i trade this for another one")),
    ("What if my item arrives damaged?",
     ("damaged delivery", "broken item"),
     "Send a photo of the damage within seven days and we ship a replacement.",
     ("my order arrived broken", "item was damaged in transit",
      "received a cracked product", "what to do about damage")),
    ("Is there a warranty?",
     ("warranty coverage",),
     "All products carry a two year warranty against defects.",
     ("how long is the warranty", "what does the warranty cover",
      "warranty length for products", "is my purchase under warranty")),
    ("How do I file a complaint?",
     ("complaints",),
     "Email support with your order number; complaints get a reply within two days.",
     ("i want to complain", "where to send a complaint",
      "how to report a problem", "make a formal complaint")),
    ("How do I reset my password?",
     ("password reset", "forgot password"),
     "Use the forgot password link on the sign in page to get a reset email.",
     ("i forgot my password", "reset my account password",
      "cannot sign in password wrong", "password recovery steps")),
    ("How do I close my account?",
     ("delete account",),
     "Contact support and your account is closed within one day.",
     ("delete my account please", "how to remove my account",
      "close my customer account", "account deletion process")),
    ("How do I update my email address?",
     ("change email",),
     "Change your email from the account settings page and confirm the new address.",
     ("update the email on my account", "change my login email",
      "new email address setup", "edit account email")),
    ("Where are your stores located?",
     ("store locations", "find a store"),
     "Store addresses are listed on the locations page, with a showroom in every region.",
     ("find the nearest store", "where is your shop",
      "list of store addresses", "is there a showroom near me")),
    ("What are your opening hours?",
     ("store hours",),
     "Stores open nine to six on weekdays and ten to four on weekends.",
     ("when does the store open", "what time do you close",
      "opening times this weekend", "store hours today")),
    ("Can I pick up my order at a store?",
     ("store pickup", "click and collect"),
     "Yes, choose pickup at checkout and collect once the ready email arrives.",
     ("collect my order in person", "pickup instead of delivery",
      "can i fetch the order myself", "order collection at the shop")),
    ("Do you offer assembly service?",
     ("assembly help",),
     "Assembly service can be added at checkout for a flat fee per item.",
     ("can someone assemble it for me", "do you build the furniture",
      "assembly service cost", "help putting it together")),
    ("Are assembly instructions available online?",
     ("instructions download",),
     "Every product page links to a printable instruction manual.",
     ("download the manual", "lost my instructions",
      "where are the assembly instructions", "need the instruction sheet")),
    ("What materials are your products made of?",
     ("materials used",),
     "Most furniture uses oak or pine with steel fasteners and leather or fabric covers.",
     ("what wood do you use", "are the products solid oak",
      "material of the furniture", "is it real leather")),
    ("How do I care for wooden furniture?",
     ("wood care",),
     "Wipe wooden surfaces with a dry cloth and oil them twice a year.",
     ("cleaning a wooden table", "how to maintain wood surfaces",
      "care tips for oak furniture", "protect my wooden desk")),
    ("Can I get spare parts?",
     ("spare screws", "replacement parts"),
     "Spare screws, bolts, and fittings ship free; contact support with the product name.",
     ("i lost a screw", "order replacement bolts",
      "missing parts from the package", "need a spare fitting")),
    ("Do you offer discounts for bulk orders?",
     ("bulk pricing", "volume discount"),
     "Orders of ten or more of one item get a ten percent discount.",
     ("discount for large orders", "cheaper if i buy many",
      "bulk order pricing", "volume deal for businesses")),
    ("How do I use a coupon code?",
     ("coupon", "promo code"),
     "Enter the coupon code at checkout; one coupon applies per order.",
     ("where do i enter the promo code", "coupon code not working",
      "apply a discount code", "redeem my coupon")),
    ("Is there a loyalty program?",
     ("membership points",),
     "Members earn one point per dollar and points convert to vouchers.",
     ("how do loyalty points work", "join the membership program",
      "what are points worth", "earn rewards on purchases")),
    ("How do I subscribe to the newsletter?",
     ("newsletter signup",),
     "Enter your email in the newsletter box in the footer of any page.",
     ("sign me up for the newsletter", "get your email updates",
      "newsletter subscription steps", "how to receive offers by email")),
    ("How do I unsubscribe from emails?",
     ("stop marketing emails",),
     "Every email has an unsubscribe link in the footer; it takes effect immediately.",
     ("stop sending me emails", "opt out of marketing messages",
      "unsubscribe from the mailing list", "too many promotional emails")),
    ("Do you have a price match policy?",
     ("price match",),
     "We match any advertised price from a national retailer at purchase time.",
     ("will you match a competitor price", "found it cheaper elsewhere",
      "price matching rules", "do you beat other prices")),
    ("What taxes apply to my order?",
     ("sales tax",),
     "Sales tax is calculated at checkout based on the delivery address.",
     ("how much tax will i pay", "is tax included in prices",
      "tax on my purchase", "why was tax added")),
    ("Can I buy now and pay later?",
     ("installments", "payment plan"),
     "Purchases over one hundred dollars can be split into four monthly payments.",
     ("pay in installments", "monthly payment plan option",
      "split my payment", "finance a purchase")),
    ("How do I report a website problem?",
     ("site bug report",),
     "Describe the problem and your browser to support; screenshots help.",
     ("the website is broken", "checkout page will not load",
      "error on the site", "report a bug on the website")),
)

# multi-turn clusters: parent prompt plus an affirmation child and a detail child
_MULTI_TURN = (
    ("Know about the protection plan",
     "The protection plan covers accidents beyond the warranty. Do you want to know about the protection plan?",
     "Yes",
     "The plan adds accident coverage for three years including stains, cracks, and breakage.",
     "Benefits",
     "Plan benefits include free repairs, one replacement per item, and no deductible."),
    ("Know about the trade program",
     "The trade program serves interior designers. Do you want to know about the trade program?",
     "Yes",
     "Trade members get project pricing, early access to new lines, and a dedicated agent.",
     "Benefits",
     "Program benefits include fifteen percent off, net billing, and free swatches."),
)

_SYNONYM_SWAPS = {
    "order": ("purchase",),
    "item": ("product", "article"),
    "store": ("shop",),
    "delivery": ("shipping",),
    "refund": ("repayment",),
    "cost": ("price", "charge"),
    "help": ("assistance",),
    "email": ("mail",),
}

_AFFIRMATIONS = ("yes", "yes please", "sure tell me more", "ok yes")


@dataclass(frozen=True)
class LabeledQuery:
    """One synthetic query with its known-relevant QA and optional context."""

    query: str
    qa_id: int
    ctx: QueryContext


def _typo(rng: random.Random, word: str) -> str:
    if len(word) < 5:
        return word
    i = rng.randrange(len(word) - 1)
    return word[:i] + word[i + 1] + word[i] + word[i + 2:]


def perturb(rng: random.Random, text: str) -> str:
    """Roughen a paraphrase: maybe drop a word, swap a synonym, add a typo."""
    words = text.split()
    if len(words) > 3 and rng.random() < 0.3:
        del words[rng.randrange(len(words))]
    for i, word in enumerate(words):
        if word in _SYNONYM_SWAPS and rng.random() < 0.3:
            words[i] = rng.choice(_SYNONYM_SWAPS[word])
    if rng.random() < 0.2:
        i = rng.randrange(len(words))
        words[i] = _typo(rng, words[i])
    return " ".join(words)


def synthetic_kb(seed: int = 0) -> KnowledgeBase:
    """The generator's KB: one QA per topic plus the multi-turn clusters."""
    pairs = []
    next_id = 1
    for question, alternates, answer, _ in _TOPICS:
        pairs.append(QAPair(
            id=next_id, question=question, answer=answer,
            alternate_questions=alternates, source="editorial",
        ))
        next_id += 1
    for parent_q, parent_a, yes_q, yes_a, detail_q, detail_a in _MULTI_TURN:
        parent_id = next_id
        pairs.append(QAPair(id=next_id, question=parent_q, answer=parent_a))
        next_id += 1
        pairs.append(QAPair(
            id=next_id, question=yes_q, answer=yes_a, parent_id=parent_id,
            alternate_questions=("yes please", "sure"),
        ))
        next_id += 1
        pairs.append(QAPair(
            id=next_id, question=detail_q, answer=detail_a, parent_id=parent_id,
        ))
        next_id += 1
    return KnowledgeBase.build(kb_id=f"synthetic-{seed}", name="synthetic corpus", qa_pairs=pairs)


def labeled_queries(kb: KnowledgeBase, seed: int = 0, per_topic: int = 3) -> list[LabeledQuery]:
    """Queries paired with the QA they were derived from."""
    rng = random.Random(seed)
    by_question = {qa.question: qa for qa in kb.qa_pairs}
    out = []
    for question, _, _, paraphrases in _TOPICS:
        qa = by_question[question]
        chosen = list(paraphrases)
        rng.shuffle(chosen)
        for text in chosen[:per_topic]:
            out.append(LabeledQuery(query=perturb(rng, text), qa_id=qa.id, ctx=QueryContext()))
    for parent_q, parent_a, yes_q, _, detail_q, _ in _MULTI_TURN:
        parent = by_question[parent_q]
        ctx = QueryContext(
            previous_qa_id=parent.id,
            previous_user_query=perturb(rng, parent_q.lower()),
            previous_answer=parent_a,
        )
        # the affirmation child shares its question text across clusters, so
        # resolve children through the parent link rather than by question
        children = [qa for qa in kb.qa_pairs if qa.parent_id == parent.id]
        yes_child = next(qa for qa in children if qa.question == yes_q)
        detail_child = next(qa for qa in children if qa.question == detail_q)
        for text in _AFFIRMATIONS:
            out.append(LabeledQuery(query=text, qa_id=yes_child.id, ctx=ctx))
        out.append(LabeledQuery(
            query=perturb(rng, detail_q.lower() + " of that"), qa_id=detail_child.id, ctx=ctx,
        ))
    return out


def training_set(
    kb: KnowledgeBase | None = None,
    seed: int = 0,
    per_topic: int = 3,
    negatives_per_query: int = 4,
) -> TrainingSet:
    """Featurize labeled queries into binary training rows.

    Negatives mix the hardest retrieval confusions with random QAs so the
    model sees both near misses and easy rejections.
    """
    if kb is None:
        kb = synthetic_kb(seed)
    rng = random.Random(seed + 1)
    index = build_index(kb)
    taxonomy = load_taxonomy()
    global_idf = load_global_idf()

    rows = []
    for query_id, labeled in enumerate(labeled_queries(kb, seed=seed, per_topic=per_topic)):
        extractor = FeatureExtractor(kb, index, taxonomy, global_idf, labeled.query, labeled.ctx)
        target = kb.get(labeled.qa_id)
        rows.append(TrainingRow(features=extractor.featurize(target), label=1, query_id=query_id))

        hits = retrieve(index, extractor.modified_stream, k=negatives_per_query + 1)
        negative_ids = [h.qa_id for h in hits if h.qa_id != labeled.qa_id]
        others = [qa.id for qa in kb.qa_pairs if qa.id != labeled.qa_id and qa.id not in negative_ids]
        rng.shuffle(others)
        negative_ids = (negative_ids + others)[:negatives_per_query]
        for qa_id in negative_ids:
            rows.append(TrainingRow(
                features=extractor.featurize(kb.get(qa_id)), label=0, query_id=query_id,
            ))
    return TrainingSet(rows=tuple(rows))
