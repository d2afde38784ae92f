#!/usr/bin/env python3
"""Regenerate the bundled corpus of everyday English sentences.

Writes data/corpus.txt (training) and data/heldout.txt (evaluation).  The
two files are disjoint: sentences are deduplicated before the split, so no
held-out line appears verbatim in the training set.  Output is fully
determined by SEED; rerunning this script reproduces the committed files
byte for byte.

Sentences come from everyday conversation frames filled from a hand-written
core lexicon plus a constructed long tail: names, places, and coined nouns
are composed fresh from syllables, mimicking the rare-word statistics of
natural text (which desk-scale template corpora otherwise lack).  The
generated text is dedicated to the public domain.
"""

import argparse
import random
from pathlib import Path

SEED = 20240605
TARGET_BYTES = 1_100_000
HELDOUT_LINES = 200
MAX_DRAWS = 3_000_000

# fraction of content-word mentions drawn from the coined long tail rather
# than the core lexicon; calibrated so the order-5 statistics of the corpus
# resemble natural English (with its unbounded rare-word tail) rather than
# a memorizable closed vocabulary
COINED_NOUN_RATE = 0.70
COINED_MODIFIER_RATE = 0.45
COINED_VERB_RATE = 0.40

NOUNS = """
table chair lamp clock mirror drawer shelf basket cushion carpet curtain
blanket pillow kettle teapot saucer plate spoon fork knife ladle tray jug
bottle jar tin box crate bucket broom mop duster sponge towel apron glove
scarf hat coat jacket sweater cardigan sock slipper boot shoe sandal belt
button zipper pocket collar sleeve thread needle yarn ribbon lace
photograph album letter postcard envelope stamp notebook journal diary pen
pencil crayon marker eraser ruler scissors glue tape string rope wire nail
hammer wrench pliers screwdriver drill saw ladder toolbox paintbrush
easel canvas sketch painting portrait frame sculpture vase pot
planter seedling sapling fern ivy moss rose tulip daisy lily orchid pansy
marigold sunflower daffodil violet clover dandelion thistle reed willow
oak maple birch cedar pine elm chestnut walnut acorn pinecone leaf branch
twig bark root stump log meadow pasture orchard vineyard hedge fence gate
path trail lane road bridge tunnel crossing signpost milestone bench
fountain pond stream creek river lake shore beach dune cliff cave hill
valley ridge summit slope field barn stable coop trough silo tractor
plow cart wagon wheelbarrow bicycle tricycle scooter sled canoe
rowboat sailboat ferry anchor oar paddle net hook lantern torch candle
fireplace hearth chimney stove oven skillet griddle pan
saucepan colander grater whisk pantry
cupboard cabinet counter sink faucet drain pipe radiator furnace vent
thermostat doorbell knocker hinge latch lock key keyring porch stoop
balcony terrace awning shutter windowsill pane ledge attic basement
cellar stairwell landing banister railing hallway corridor closet
wardrobe dresser nightstand headboard mattress quilt duvet sheet
pillowcase crib cradle armchair sofa loveseat ottoman
footstool rug mat doormat coaster placemat napkin tablecloth
saltshaker grinder mug cup glass
tumbler pitcher flask thermos cooler hamper sandwich biscuit
muffin scone bagel croissant loaf baguette roll pretzel cracker cookie
brownie cupcake pie tart pudding custard jam jelly marmalade honey syrup
butter cheese yogurt cream milk buttermilk oat barley wheat rye corn
rice bean lentil pea chickpea peanut almond cashew raisin prune
apricot peach plum cherry grape melon mango papaya banana apple pear
orange lemon lime grapefruit berry currant fig date olive pickle radish
turnip beet carrot parsnip potato yam onion shallot garlic leek celery
fennel cabbage lettuce spinach kale chard broccoli cauliflower squash
pumpkin zucchini cucumber tomato pepper eggplant mushroom herb basil
thyme sage rosemary parsley cilantro dill mint oregano cinnamon nutmeg
clove ginger vanilla cocoa coffee tea cider lemonade juice soup stew
broth gravy casserole omelet pancake waffle toast cereal oatmeal porridge
dog cat kitten puppy rabbit hamster parrot canary finch sparrow robin
wren swallow crow raven magpie pigeon dove owl hawk falcon eagle heron
crane stork duck goose swan chicken rooster hen turkey pheasant quail
peacock squirrel chipmunk hedgehog mole vole mouse rat badger otter
beaver fox wolf deer fawn elk moose bear raccoon skunk possum bat frog
toad newt lizard turtle snail slug beetle ladybug cricket grasshopper
dragonfly butterfly moth caterpillar bee wasp hornet ant spider worm
minnow trout salmon bass perch catfish goldfish pony horse foal donkey
mule goat sheep lamb calf cow bull pig piglet kite puzzle marble domino
checker chessboard card dice token jigsaw riddle crossword
storybook novel atlas dictionary almanac catalog brochure pamphlet
newspaper magazine bulletin calendar planner ledger receipt coupon
ticket badge medal trophy banner flag pennant balloon
streamer confetti candlestick ornament bauble trinket locket bracelet
necklace earring brooch hairpin comb brush razor soap shampoo lotion
powder perfume tissue bandage thermometer spectacles
cane crutch walker wheelchair stretcher pillbox dropper vial beaker
funnel magnet compass telescope microscope binoculars camera tripod
film reel projector screen radio speaker antenna dial switch plug cord
socket bulb fuse battery flashlight umbrella raincoat galoshes mitten
earmuff snowshoe skate ski toboggan surfboard sandbox swing slide
seesaw carousel bandstand gazebo pavilion tent tarp stake
campfire skewer marshmallow firefly constellation comet meteor
moonbeam sunrise sunset horizon breeze gust drizzle downpour puddle
rainbow frost icicle snowflake blizzard thaw mist fog dew haze thunder
lightning cloudburst heatwave
""".split()

ADJECTIVES = """
red blue green yellow purple orange brown gray white black pink golden
silver copper bronze ivory amber crimson scarlet maroon violet indigo
turquoise teal navy olive beige tan cream rosy dusty faded bright dim
pale dark light soft hard smooth rough silky velvety fuzzy furry woolly
crisp brittle sturdy flimsy solid hollow heavy weightless dense airy
tiny small little compact modest huge enormous giant massive towering
slender narrow wide broad deep shallow tall short long stubby round
oval square crooked straight curved bent twisted tangled neat tidy messy
cluttered spotless grimy muddy sandy soggy damp moist dry parched
fresh stale ripe overripe tender tough chewy crunchy juicy savory sweet
sour bitter salty spicy mild bland tangy smoky buttery creamy fluffy
flaky toasted burnt frozen chilled lukewarm warm cozy snug toasty
drafty chilly frosty icy windy breezy balmy humid muggy sunny cloudy
overcast gloomy dreary cheerful merry jolly lively spirited peppy weary
drowsy sleepy groggy restless jittery fidgety calm serene tranquil
peaceful quiet silent hushed noisy rowdy boisterous gentle tender kindly
friendly cordial gracious polite courteous humble bashful timid shy bold
daring brave fearless plucky cautious careful reckless hasty patient
steady reliable loyal honest earnest sincere clever witty sharp keen
brilliant curious inquisitive thoughtful wistful dreamy hopeful
grateful cheery content proud stubborn fussy picky finicky cranky grumpy
sulky moody anxious uneasy nervous jumpy startled astonished
amazed delighted thrilled giddy elated ancient antique vintage old aged
elderly youthful new shiny gleaming glossy polished tarnished
rusty dented chipped cracked frayed threadbare patched mended darned
wobbly rickety creaky squeaky sleek elegant fancy plain simple
ordinary peculiar odd quaint charming lovely handsome splendid
gorgeous magnificent grand spare roomy cramped crowded
empty vacant abandoned inviting welcoming familiar foreign distant
nearby local rural coastal inland northern southern eastern
western upper lower inner outer extra double single twin royal
noble common rare scarce plentiful abundant generous meager skimpy
thrifty lavish practical useful handy useless pointless necessary
optional urgent minor major slight gradual sudden swift slow speedy
rapid brisk leisurely punctual tardy early late seasonal weekly daily
monthly annual occasional frequent constant endless brief fleeting
temporary permanent original final leftover secondhand borrowed
rented shared private public secret hidden visible obvious faint vivid
colorful drab dull muted loud musical tuneful rhythmic melodic
fragrant aromatic pungent musty earthy floral fruity minty peppery
""".split()

VERBS_TRANS_PAST = """
carried lifted moved shifted dragged pushed pulled rolled slid tossed
caught dropped placed set rested leaned propped stacked piled arranged
sorted folded unfolded wrapped unwrapped tied untied fastened buttoned
zipped buckled laced knotted stitched sewed mended patched darned
trimmed clipped pruned snipped carved whittled sanded polished waxed
buffed scrubbed rinsed washed dried wiped dusted swept mopped vacuumed
tidied cleared cleaned straightened fluffed shook aired brushed
combed braided curled painted sketched drew traced colored stenciled
glazed fired molded shaped kneaded flattened sliced diced minced
chopped grated peeled cored pitted shelled husked mashed whipped
stirred blended mixed seasoned salted peppered spiced sweetened
tasted sampled nibbled savored devoured finished served plated garnished
poured filled refilled emptied drained strained sieved measured weighed
counted tallied numbered labeled marked stamped sealed addressed mailed
posted delivered fetched retrieved gathered collected bundled packed
unpacked loaded unloaded stored shelved filed archived saved kept hid
tucked stashed buried unearthed discovered found spotted noticed glimpsed
watched observed studied examined inspected checked tested tried fixed
repaired restored rebuilt assembled dismantled installed adjusted tuned
oiled greased sharpened hammered nailed screwed
bolted welded glued taped clamped wedged braced anchored steadied
balanced hung mounted framed displayed admired praised complimented
thanked greeted welcomed visited invited hosted entertained amused
surprised startled teased told asked answered reminded warned
advised taught showed demonstrated explained described recounted
remembered forgot recognized recalled mentioned whispered repeated
recited read wrote copied typed printed signed dated drafted revised
borrowed lent returned exchanged traded swapped bought sold ordered
chose picked selected preferred wanted needed liked loved enjoyed
treasured cherished missed
""".split()

VERBS_INTRANS_PAST = """
wobbled rattled creaked squeaked hummed buzzed whirred clicked ticked
chimed rang jingled rustled crackled popped fizzed hissed gurgled
dripped leaked overflowed splashed rippled shimmered sparkled glowed
flickered dimmed brightened faded gleamed glinted drifted floated
hovered soared glided swooped fluttered flapped perched roosted nested
landed settled rested dozed napped slumbered snored stirred woke rose
stretched yawned wandered strolled ambled sauntered marched paced
tiptoed crept crawled scampered scurried darted dashed sprinted jogged
trotted galloped hopped skipped bounced leaped vaulted tumbled
slipped stumbled tripped staggered swayed knelt crouched squatted
sat stood waited lingered paused hesitated idled loitered arrived
departed returned vanished disappeared appeared emerged surfaced sank
dove plunged waded swam paddled anchored docked moored grumbled
muttered sighed chuckled giggled laughed smiled grinned beamed frowned
scowled pouted wept sniffled shivered trembled quivered shuddered
sneezed coughed hiccuped gasped panted wheezed whistled sang
chatted gossiped bantered argued agreed nodded shrugged blinked winked
stared gazed glanced peeked squinted listened eavesdropped daydreamed
pondered mused reflected wondered worried fretted relaxed unwound
rejoiced celebrated feasted picnicked camped hiked climbed rambled
gardened weeded watered harvested bloomed blossomed sprouted wilted
withered thrived flourished ripened
""".split()

ADVERBS = """
quietly softly gently slowly carefully carelessly quickly swiftly
briskly suddenly gradually eventually finally immediately promptly
patiently eagerly cheerfully happily gladly proudly shyly timidly
boldly bravely calmly nervously anxiously wearily sleepily drowsily
lazily busily diligently steadily constantly frequently occasionally
rarely seldom barely nearly almost completely entirely thoroughly
oddly strangely curiously surprisingly predictably
gracefully clumsily awkwardly smoothly evenly unevenly neatly messily
loudly noisily silently secretly openly honestly politely rudely
warmly coolly fondly tenderly firmly loosely tightly
""".split()

MATERIALS = """
oak pine walnut cedar maple birch copper brass iron steel tin pewter
ceramic porcelain marble granite leather suede velvet cotton linen wool
silk wicker bamboo crystal rubber cardboard clay stone brick canvas
denim flannel chrome enamel nickel willow rattan cork felt burlap
""".split()

DAYPARTS = "morning afternoon evening night noon midday dusk dawn weekend".split()
MEALS = "breakfast lunch dinner supper brunch teatime".split()
ROOMS = """kitchen bedroom bathroom hallway attic basement cellar porch
garden yard garage workshop study library parlor pantry laundry nursery
sunroom den stairwell shed greenhouse driveway""".split()

FIRST_NAMES = """
anna robert maria james linda michael susan david karen thomas nancy
daniel betty paul sandra mark carol steven ruth kevin helen brian alice
edward janet george diane frank joan peter gloria henry marie walter
doris arthur evelyn harold mildred ralph lucille ernest florence eugene
martha leonard edith stanley bernice vincent rosa clara hugo elsie
oscar mabel felix hazel leon pearl victor opal cecil iris rufus flora
""".split()

RELATIVES = ["my mother", "my father", "my sister", "my brother", "my son",
             "my daughter", "my wife", "my husband", "my friend", "the nurse",
             "my neighbor", "my cousin", "my aunt", "my uncle",
             "the caregiver", "my grandson", "my granddaughter"]

TITLES = ["mr", "mrs", "miss", "doctor", "old", "young", "grandpa",
          "grandma", "aunt", "uncle", "cousin", "neighbor"]

# syllable inventory for the constructed long tail
ONSETS = """b bl br c ch cl cr d dr f fl fr g gl gn gr h j k kn l m n p
ph pl pr qu r s sc sh sk sl sm sn sp st str sw t th tr tw v w wh wr z
""".split()
NUCLEI = "a e i o u ai au aw ay ea ee ei ie oa oi oo ou ow oy ue".split()
CODAS = """b ck ct d dd ff ft g gg ld lk ll lm lp lt m mb mp n nd ng nk
nn nt p pp pt r rb rd rk rl rm rn rp rt s sh sk sp ss st t tch th tt x
""".split()
SURNAME_ENDINGS = ("son ton ley ner field wood ford dale more lin man sen "
                   "well worth ham burn ridge stone brook shaw").split()
TOWN_ENDINGS = ("ville ton burg field ford haven port dale wick bury "
                "mouth crest hollow falls grove").split()
NOUN_SUFFIXES = ("wort root cap vine berry grass leaf weed thorn "
                 "bloom stalk pod moss fern cone husk bur").split()
MODIFIER_SUFFIXES = "y ish some ed en".split()

DETERMINERS = ("the that this my our your her his their some each "
               "every another").split()
PREPOSITIONS = ("near beside by under behind over past against along "
                "around inside outside beneath atop toward").split()
SUBJECTS = "i we she he they".split()

VOWELS = "aeiou"


class SentenceFactory:
    """All randomness flows through one rng, so output is seed-determined."""

    def __init__(self, rng: random.Random,
                 coined_noun_rate: float = COINED_NOUN_RATE,
                 coined_modifier_rate: float = COINED_MODIFIER_RATE,
                 coined_verb_rate: float = COINED_VERB_RATE):
        self.rng = rng
        self.coined_noun_rate = coined_noun_rate
        self.coined_modifier_rate = coined_modifier_rate
        self.coined_verb_rate = coined_verb_rate

    def syllable(self) -> str:
        rng = self.rng
        s = rng.choice(ONSETS) + rng.choice(NUCLEI)
        if rng.random() < 0.6:
            s += rng.choice(CODAS)
        return s

    def coin(self, endings=None) -> str:
        rng = self.rng
        while True:
            word = self.syllable()
            if rng.random() < 0.55:
                word += self.syllable()
            if endings is not None:
                word += rng.choice(endings)
            if 4 <= len(word) <= 14:
                return word

    def person(self) -> str:
        rng = self.rng
        x = rng.random()
        if x < 0.45:
            return rng.choice(TITLES) + " " + self.coin(SURNAME_ENDINGS)
        if x < 0.72:
            return rng.choice(FIRST_NAMES)
        return rng.choice(RELATIVES)

    def town(self) -> str:
        return self.coin(TOWN_ENDINGS)

    def noun(self) -> str:
        rng = self.rng
        if rng.random() < self.coined_noun_rate:
            n = self.coin(NOUN_SUFFIXES if rng.random() < 0.4 else None)
        else:
            n = rng.choice(NOUNS)
        if rng.random() < 0.22:
            n += "es" if n.endswith(("s", "x", "ch", "sh")) else "s"
        return n

    def modifier(self) -> str:
        rng = self.rng
        if rng.random() < self.coined_modifier_rate:
            return self.coin(MODIFIER_SUFFIXES)
        return rng.choice(ADJECTIVES)

    def verb_t(self) -> str:
        rng = self.rng
        if rng.random() < self.coined_verb_rate:
            return self.coin(["ed"])
        return rng.choice(VERBS_TRANS_PAST)

    def verb_i(self) -> str:
        rng = self.rng
        if rng.random() < self.coined_verb_rate:
            return self.coin(["ed"])
        return rng.choice(VERBS_INTRANS_PAST)

    def np(self) -> str:
        rng = self.rng
        x = rng.random()
        n = self.noun()
        if x < 0.34:
            return self.modifier() + " " + n
        if x < 0.58:
            return rng.choice(MATERIALS) + " " + n
        if x < 0.76:
            return self.modifier() + " " + rng.choice(MATERIALS) + " " + n
        return n

    def dnp(self) -> str:
        return self.rng.choice(DETERMINERS) + " " + self.np()

    def a_np(self) -> str:
        phrase = self.np()
        return ("an " if phrase[0] in VOWELS else "a ") + phrase

    def fill(self, slot: str) -> str:
        rng = self.rng
        if slot == "np":
            return self.np()
        if slot == "dnp":
            return self.dnp()
        if slot == "anp":
            return self.a_np()
        if slot == "noun":
            return self.noun()
        if slot == "adj":
            return self.modifier()
        if slot == "vt":
            return self.verb_t()
        if slot == "vi":
            return self.verb_i()
        if slot == "adv":
            return rng.choice(ADVERBS)
        if slot == "person":
            return self.person()
        if slot == "subj":
            return rng.choice(SUBJECTS)
        if slot == "prep":
            return rng.choice(PREPOSITIONS)
        if slot == "town":
            return self.town()
        if slot == "room":
            return rng.choice(ROOMS)
        if slot == "daypart":
            return rng.choice(DAYPARTS)
        if slot == "meal":
            return rng.choice(MEALS)
        raise KeyError(slot)

    def expand(self, template: str) -> str:
        out = template
        while "{" in out:
            start = out.index("{")
            end = out.index("}", start)
            out = out[:start] + self.fill(out[start + 1:end]) + out[end + 1:]
        return out


FRAMES = [
    "{person} {vt} {dnp} {prep} {dnp} before {meal}",
    "{subj} {vt} {dnp} and {dnp} this {daypart}",
    "{subj} {vt} {dnp} after {meal}",
    "{person} {vt} {anp} in the {room}",
    "{subj} found {anp} {prep} {dnp}",
    "there was {anp} {prep} {dnp} this {daypart}",
    "{dnp} {vi} {adv} all {daypart}",
    "{dnp} {prep} {dnp} {vi} again",
    "{anp} {vi} {prep} {dnp} at {daypart}",
    "{dnp} in the {room} looks {adj} today",
    "{dnp} from {town} finally arrived",
    "{person} from {town} {vt} {dnp} for us",
    "{subj} drove through {town} past {dnp}",
    "{dnp} we bought in {town} turned out {adj}",
    "please bring me {dnp} from the {room}",
    "can you put {dnp} {prep} {dnp}",
    "could you hand me that {np}",
    "please set {dnp} {prep} {dnp}",
    "{subj} left {dnp} {prep} {dnp} in the {room}",
    "can we move {dnp} into the {room}",
    "i would like {dnp} instead of {dnp}",
    "{dnp} smells like {noun} and {noun}",
    "this {np} feels {adj} and {adj}",
    "the {room} was full of {np}s",
    "{person} said {dnp} from {town} was {adj}",
    "{person} told me about {anp} in {town}",
    "{subj} heard {dnp} {vi} during {meal}",
    "{subj} watched {anp} while {dnp} {vi}",
    "after {meal} {subj} {vt} {dnp} {adv}",
    "before {meal} {subj} {vt} {dnp} together",
    "{dnp} {vi} while {subj} {vt} {dnp}",
    "{dnp} that {person} {vt} {vi} {adv}",
    "{subj} wanted to paint {dnp} {adj} like {dnp}",
    "{dnp} makes the {room} feel {adj}",
    "{person} and {person} {vt} {dnp} yesterday",
    "remember when {person} {vt} {dnp} in {town}",
    "{subj} dreamed about {anp} that {vi} {adv}",
    "{dnp} {vi} until {dnp} {vi}",
    "every {daypart} {dnp} {vi} {prep} the {room}",
    "{subj} kept {dnp} {prep} {dnp}",
    "{subj} traded {dnp} for {anp}",
    "{person} mailed us {anp} from {town}",
    "{dnp} costs more than {dnp}",
    "somebody {vt} {dnp} and left {anp}",
    "a parcel of {np}s came from {town} at {daypart}",
    "{subj} saved this {np} for {person}",
    "{subj} showed {person} {dnp} in the {room}",
    "{dnp} {prep} {dnp} belongs to {person}",
    "{dnp} and {dnp} both {vi} this {daypart}",
    "that {np} of yours {vi} {adv} last night",
    "{person} and {person} visited {town} this {daypart}",
    "{subj} walked from {town} to {town} past {dnp}",
]

# terse switch-user style requests; joined in pairs so utterances stay long
TELEGRAPHIC = [
    "need {np} now",
    "bring {dnp} please",
    "fetch {dnp} from the {room}",
    "want {noun} for {meal}",
    "put {np} {prep} {dnp}",
    "more {noun} please",
    "no more {noun} today",
    "help with {dnp}",
    "move {np} to the {room}",
    "hand me {dnp}",
    "take {dnp} away",
    "find my {adj} {noun}",
    "check {dnp} {prep} {dnp}",
    "warm up {dnp}",
    "save the {noun} for {person}",
]

FIXED_SENTENCES = [
    "good morning", "good night", "see you later", "how are you today",
    "i love you", "yes please", "no thank you", "i don't know",
    "maybe later", "that sounds good", "i agree", "please wait a moment",
    "i changed my mind", "never mind", "could you repeat that", "i'm okay",
    "what time is it", "what day is it today", "i need to use the bathroom",
    "please call the nurse for me", "could you fluff my pillow",
    "please open the window a little", "i slept well last night",
    "that was very kind of you", "let me think about it",
    "can we talk for a while", "it's good to see you", "give me a minute",
]

CONNECTORS = ["and", "and then", "but", "so", "because", "while",
              "although", "after that", "which was lucky because"]


def draw_sentence(factory: SentenceFactory) -> str:
    rng = factory.rng
    roll = rng.random()
    if roll < 0.03:
        return rng.choice(FIXED_SENTENCES)
    if roll < 0.30:
        parts = [factory.expand(rng.choice(TELEGRAPHIC))
                 for _ in range(1 + (rng.random() < 0.75) + (rng.random() < 0.35))]
        return (" " + rng.choice(["and", "then", "and then"]) + " ").join(parts)
    core = factory.expand(rng.choice(FRAMES))
    if rng.random() < 0.30:
        core = core + " " + rng.choice(CONNECTORS) + " " + factory.expand(rng.choice(FRAMES))
    return core


def generate(seed: int, target_bytes: int, heldout_lines: int,
             coined_noun_rate: float = COINED_NOUN_RATE):
    rng = random.Random(seed)
    factory = SentenceFactory(rng, coined_noun_rate)
    seen = set()
    sentences = []
    total_bytes = 0
    draws = 0
    while total_bytes < target_bytes and draws < MAX_DRAWS:
        draws += 1
        s = draw_sentence(factory)
        if s in seen:
            continue
        seen.add(s)
        sentences.append(s)
        total_bytes += len(s) + 1
    rng.shuffle(sentences)
    return sentences[:heldout_lines], sentences[heldout_lines:], draws


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default=str(Path(__file__).resolve().parent.parent / "data"))
    parser.add_argument("--seed", type=int, default=SEED)
    parser.add_argument("--target-bytes", type=int, default=TARGET_BYTES)
    parser.add_argument("--heldout-lines", type=int, default=HELDOUT_LINES)
    parser.add_argument("--coined-noun-rate", type=float, default=COINED_NOUN_RATE)
    args = parser.parse_args()

    heldout, train, draws = generate(args.seed, args.target_bytes,
                                     args.heldout_lines, args.coined_noun_rate)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    corpus_path = out_dir / "corpus.txt"
    heldout_path = out_dir / "heldout.txt"
    corpus_path.write_text("\n".join(train) + "\n", encoding="utf-8")
    heldout_path.write_text("\n".join(heldout) + "\n", encoding="utf-8")

    words = set()
    for s in train + heldout:
        words.update(s.split())
    print(f"draws: {draws}, sentences: {len(train) + len(heldout)}, word types: {len(words)}")
    print(f"{corpus_path}: {len(train)} lines, {corpus_path.stat().st_size} bytes")
    print(f"{heldout_path}: {len(heldout)} lines, {heldout_path.stat().st_size} bytes")


if __name__ == "__main__":
    main()
