#!/usr/bin/env python3
"""Generate the bundled opinion word lists.

Seeds are tagged words ("word:tag") expanded with regular English morphology:

    a   adjective            -> base, -ly, -ness
    A   gradable adjective   -> base, -ly, -ness, -er, -est
    v   regular verb         -> base, -s, -ed, -ing
    vd  CVC verb             -> base, -s, doubled -ed / -ing
    n   noun                 -> base, plural
    x   no expansion         -> base only

Output files are alphabetically sorted, lowercase a-z words, one per line,
with ';' comment headers. Base words are always kept; derived forms are
added in sorted order until the target sizes (2006 positive, 4783 negative)
are reached exactly. Cross-list collisions among derived forms are dropped
from the negative side; collisions among base words are authoring errors.

Run from the repository root:  python tools/gen_lexicon.py
"""

import re
from pathlib import Path

POSITIVE_TARGET = 2006
NEGATIVE_TARGET = 4783

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "sentipipe" / "data"

_VOWELS = "aeiou"
_WORD_RE = re.compile(r"^[a-z]+$")


def _adverb(w):
    if w.endswith("y") and len(w) > 2 and w[-2] not in _VOWELS:
        return w[:-1] + "ily"
    if w.endswith("le") and len(w) > 3 and w[-3] not in _VOWELS:
        return w[:-1] + "y"
    if w.endswith("ll"):
        return w + "y"
    if w.endswith("ic"):
        return w + "ally"
    return w + "ly"


def _noun_ness(w):
    if w.endswith("y") and len(w) > 2 and w[-2] not in _VOWELS:
        return w[:-1] + "iness"
    return w + "ness"


def _plural(w):
    if w.endswith(("s", "x", "z", "ch", "sh")):
        return w + "es"
    if w.endswith("y") and w[-2] not in _VOWELS:
        return w[:-1] + "ies"
    return w + "s"


def _past(w, double=False):
    if double:
        return w + w[-1] + "ed"
    if w.endswith("e"):
        return w + "d"
    if w.endswith("y") and w[-2] not in _VOWELS:
        return w[:-1] + "ied"
    return w + "ed"


def _gerund(w, double=False):
    if double:
        return w + w[-1] + "ing"
    if w.endswith("ie"):
        return w[:-2] + "ying"
    if w.endswith("e") and not w.endswith("ee"):
        return w[:-1] + "ing"
    return w + "ing"


def _comparative(w):
    if w.endswith("e"):
        return w + "r"
    if w.endswith("y") and w[-2] not in _VOWELS:
        return w[:-1] + "ier"
    return w + "er"


def _superlative(w):
    if w.endswith("e"):
        return w + "st"
    if w.endswith("y") and w[-2] not in _VOWELS:
        return w[:-1] + "iest"
    return w + "est"


def expand(word, tag):
    """Return (base, derived_forms) for one tagged seed."""
    if tag == "x":
        return word, []
    if tag == "n":
        return word, [_plural(word)]
    if tag == "v":
        return word, [_plural(word), _past(word), _gerund(word)]
    if tag == "vd":
        return word, [_plural(word), _past(word, True), _gerund(word, True)]
    if tag == "a":
        return word, [_adverb(word), _noun_ness(word)]
    if tag == "A":
        return word, [_adverb(word), _noun_ness(word), _comparative(word), _superlative(word)]
    raise ValueError(f"unknown tag {tag!r} for {word!r}")


def parse_seeds(block):
    seeds = []
    seen = set()
    for item in block.split():
        word, _, tag = item.partition(":")
        tag = tag or "x"
        if not _WORD_RE.match(word):
            raise ValueError(f"seed {word!r} is not lowercase a-z")
        if word in seen:
            continue
        seen.add(word)
        seeds.append((word, tag))
    return seeds


POSITIVE_SEEDS = """
good:A great:A excellent:a amazing:x wonderful:a fantastic:a superb:a brilliant:a
outstanding:x remarkable:a impressive:a exceptional:a marvelous:a splendid:a
magnificent:a delightful:a pleasant:a enjoyable:a lovely:A beautiful:a gorgeous:a
stunning:x elegant:a graceful:a charming:a attractive:a appealing:x desirable:a
favorable:a beneficial:a helpful:a useful:a valuable:a worthy:a reliable:a
trustworthy:a honest:a fair:A generous:a kind:A gentle:A warm:A friendly:a
cheerful:a happy:A joyful:a glad:x merry:A bright:A radiant:a vibrant:a lively:a
energetic:a dynamic:a robust:a strong:A healthy:A safe:A secure:a stable:a
steady:A calm:A peaceful:a serene:a tranquil:a comfortable:a cozy:A convenient:a
affordable:a cheap:A economical:a efficient:a effective:a productive:a
successful:a prosperous:a thriving:x flourishing:x abundant:a plentiful:a rich:A
luxurious:a premium:x superior:x supreme:a ideal:a perfect:a flawless:a pure:A
clean:A fresh:A crisp:A smooth:A soft:A tender:A sweet:A tasty:A delicious:a
savory:x creamy:A fragrant:a aromatic:a refreshing:x invigorating:x soothing:x
relaxing:x pleasing:x satisfying:x gratifying:x rewarding:x fulfilling:x
promising:x encouraging:x inspiring:x uplifting:x heartening:x motivating:x
empowering:x reassuring:x comforting:x welcoming:x accommodating:x supportive:a
cooperative:a collaborative:a harmonious:a unified:x coherent:a consistent:a
balanced:x sensible:a reasonable:a rational:a logical:a wise:A smart:A clever:A
intelligent:a brainy:A gifted:x talented:x skilled:x skillful:a adept:a
proficient:a competent:a capable:a qualified:x experienced:x masterful:a expert:n
polished:x refined:x sophisticated:x classy:A stylish:a chic:x trendy:A modern:a
innovative:a creative:a original:a inventive:a resourceful:a visionary:x bold:A
brave:A courageous:a fearless:a daring:x heroic:a valiant:a noble:A dignified:x
gracious:a courteous:a polite:A respectful:a considerate:a thoughtful:a
attentive:a caring:x compassionate:a sympathetic:a empathetic:a benevolent:a
charitable:a humane:a merciful:a forgiving:x tolerant:a patient:a humble:A
modest:a sincere:a genuine:a authentic:a truthful:a candid:a faithful:a loyal:a
devoted:a dependable:a dutiful:a diligent:a industrious:a hardworking:x
meticulous:a thorough:a careful:a precise:a accurate:a exact:a correct:a right:A
proper:a appropriate:a suitable:a fitting:x apt:a relevant:a timely:x prompt:a
punctual:a swift:A quick:A fast:A speedy:A rapid:a agile:a nimble:A deft:A
neat:A tidy:A orderly:x organized:x structured:x methodical:a systematic:a
functional:a practical:a handy:A versatile:a flexible:a adaptable:a durable:a
sturdy:A solid:a tough:A resilient:a lasting:x enduring:x permanent:a immortal:a
legendary:x famous:a renowned:x celebrated:x acclaimed:x admired:x esteemed:x
respected:x revered:x honored:x prestigious:a reputable:a credible:a
believable:a convincing:a persuasive:a compelling:a engaging:a captivating:x
enchanting:a fascinating:x intriguing:x interesting:a entertaining:x amusing:a
fun:x funny:A witty:A humorous:a playful:a jolly:x cheery:A sunny:A festive:a
celebratory:x triumphant:a victorious:a winning:x successful:a lucky:A
fortunate:a blessed:a thankful:a grateful:a appreciative:a content:x contented:a
satisfied:x pleased:x delighted:x thrilled:x excited:x elated:x ecstatic:a
overjoyed:x jubilant:a euphoric:x blissful:a hopeful:a optimistic:a positive:a
upbeat:x buoyant:a eager:a enthusiastic:a passionate:a zealous:a spirited:x
keen:A avid:a ardent:a devout:a earnest:a vigorous:a hearty:A hale:x fit:x
nourishing:x nutritious:a wholesome:a hygienic:x salubrious:x curative:x
healing:x restorative:x therapeutic:x rejuvenating:x revitalizing:x
constructive:a instructive:a educational:x informative:a enlightening:x
insightful:a perceptive:a astute:a shrewd:A discerning:x judicious:a prudent:a
thrifty:A frugal:a economic:x provident:x profitable:a lucrative:a
advantageous:a worthwhile:x invaluable:x priceless:x treasured:x cherished:x
beloved:x adored:x precious:a darling:n dear:A sweetheart:n angel:n gem:n
jewel:n treasure:n marvel:n wonder:n miracle:n delight:n pleasure:n joy:n
happiness:x bliss:x ecstasy:x euphoria:x paradise:n heaven:n utopia:n comfort:n
ease:n relief:n solace:n serenity:x harmony:x peace:n amity:x goodwill:x
kindness:x warmth:x affection:n fondness:x love:v adore:v admire:v appreciate:v
enjoy:v like:v cherish:v treasure:v value:v praise:v applaud:v commend:v
compliment:v congratulate:v celebrate:v honor:v respect:v esteem:v trust:v
endorse:v approve:v support:v encourage:v inspire:v motivate:v uplift:v
empower:v strengthen:v enrich:v enhance:v improve:v upgrade:v refine:v polish:v
perfect:v optimize:v streamline:v simplify:v clarify:v illuminate:v brighten:v
cheer:v gladden:v please:v delight:v satisfy:v gratify:v reward:v benefit:v
help:v assist:v aid:v serve:v nurture:v nourish:v heal:v cure:v restore:v
revive:v rejuvenate:v refresh:v renew:v recover:v rescue:v save:v protect:v
defend:v secure:v safeguard:v shelter:v comfort:v console:v soothe:v reassure:v
calm:v relax:v ease:v relieve:v liberate:v free:v release:v forgive:v pardon:v
reconcile:v unite:v bond:v befriend:v welcome:v greet:v embrace:v accept:v
include:v share:v give:x donate:v contribute:v volunteer:v cooperate:v
collaborate:v succeed:v prosper:v flourish:v thrive:v bloom:v blossom:v grow:x
advance:v progress:v achieve:v accomplish:v attain:v excel:x surpass:v exceed:x
outperform:v win:x triumph:v prevail:v conquer:v master:v lead:x guide:v
mentor:v teach:x educate:v enlighten:v inform:v train:v coach:v recommend:v
favor:v prefer:v acclaim:v laud:v glorify:v exalt:v hail:v toast:v thank:v
bless:x gift:n bonus:n prize:n award:n reward:n merit:n virtue:n strength:n
asset:n advantage:n benefit:n gain:n profit:n win:n victory:x triumph:n
success:x achievement:n accomplishment:n milestone:n breakthrough:n
improvement:n upgrade:n progress:x growth:n boom:n surge:n opportunity:x
promise:n potential:n hope:n optimism:x confidence:n courage:n valor:n
bravery:x honesty:x integrity:x honor:n dignity:x grace:n charm:n beauty:x
splendor:n glory:x radiance:x brilliance:n luster:n shine:n sparkle:n glow:n
masterpiece:n gem:x classic:n favorite:n champion:n winner:n hero:n star:n
genius:n talent:n prodigy:n virtuoso:n ace:n pro:x legend:n idol:n icon:n
paragon:n benefactor:n patron:n ally:x friend:n companion:n partner:n
supporter:n advocate:n mentor:n guardian:n savior:n
agreeable:a amiable:a affable:a cordial:a genial:a jovial:a amicable:a
congenial:a personable:x likable:a lovable:a adorable:a endearing:x winsome:a
cute:A handsome:a pretty:A fine:A dandy:A swell:x superlative:a exemplary:x
sterling:x topnotch:x firstrate:x stellar:x phenomenal:a extraordinary:a
incredible:a unbelievable:a astonishing:x astounding:x breathtaking:x
dazzling:x glorious:a sublime:a exquisite:a divine:a heavenly:x angelic:a
majestic:a regal:a grand:A stately:x opulent:a lavish:a plush:A deluxe:x
posh:A swanky:A ritzy:A spotless:a immaculate:a pristine:x unblemished:x
unsullied:x untarnished:x spick:x gleaming:x glistening:x shiny:A lustrous:a
vivid:a colorful:a picturesque:a scenic:a idyllic:x charming:x quaint:A
cozier:x homely:x snug:A plush:x comfy:A restful:a quiet:A serenely:x mild:A
temperate:a pleasantly:x benign:a harmless:a painless:a effortless:a easy:A
simple:A straightforward:a intuitive:a accessible:a affordable:x economized:x
inexpensive:a reasonable:x budget:x bargain:n deal:n discount:n saving:n
rebate:n subsidy:n windfall:n jackpot:n bounty:n boon:n blessing:n godsend:n
perk:n plus:n upside:n silverlining:x
memorable:a unforgettable:a cherishable:x commendable:a praiseworthy:x
admirable:a laudable:a meritorious:a honorable:a estimable:a
creditable:a dependably:x steadfast:a unwavering:x resolute:a
determined:x tenacious:a persistent:a untiring:x tireless:a
vital:a essential:a indispensable:a fundamental:x paramount:x
spectacular:a effortlessly:x
""".strip()


NEGATIVE_SEEDS_1 = """
bad:x poor:A awful:a terrible:a horrible:a dreadful:a atrocious:a abysmal:a
appalling:x horrendous:a horrid:a ghastly:A hideous:a lousy:A shoddy:A crummy:A
shabby:A sloppy:A slapdash:x slipshod:x careless:a negligent:a reckless:a
rash:A hasty:A thoughtless:a senseless:a mindless:a brainless:a foolish:a
stupid:A idiotic:a moronic:a imbecilic:x dumb:A dim:A dense:A obtuse:a
ignorant:a clueless:a incompetent:a inept:a unskilled:x amateurish:a bungling:x
clumsy:A awkward:a inferior:a substandard:x mediocre:a secondrate:x shoddier:x
defective:a faulty:A flawed:x broken:x damaged:x cracked:x chipped:x dented:x
scratched:x worn:x frayed:x tattered:x ragged:A threadbare:x shopworn:x
rundown:x dilapidated:x decrepit:a crumbling:x collapsing:x failing:x
malfunctioning:x unreliable:a erratic:a inconsistent:a unstable:a shaky:A
wobbly:A flimsy:A fragile:a brittle:a feeble:A weak:A frail:A puny:A
powerless:a helpless:a useless:a worthless:a pointless:a futile:a fruitless:a
hopeless:a aimless:a meaningless:a trivial:a petty:A paltry:A measly:x
insignificant:a negligible:x inadequate:a insufficient:a deficient:a lacking:x
scarce:a scant:a meager:a sparse:a skimpy:A stingy:A miserly:x cheapskate:n
greedy:A avaricious:a covetous:a grasping:x rapacious:a gluttonous:a selfish:a
egotistic:a egotistical:a narcissistic:x selfcentered:x arrogant:a haughty:A
pompous:a pretentious:a smug:A conceited:a vain:A boastful:a bragging:x
condescending:x patronizing:x snobbish:a snooty:A snotty:A uppity:x elitist:n
dismissive:a contemptuous:a scornful:a disdainful:a derisive:a mocking:x
sneering:x jeering:x taunting:x insulting:x offensive:a abusive:a derogatory:x
disparaging:x demeaning:x degrading:x humiliating:x belittling:x insolent:a
impudent:a impertinent:a disrespectful:a rude:A impolite:a discourteous:a
uncivil:a boorish:a uncouth:a crass:A vulgar:a crude:A coarse:A obscene:a
profane:a lewd:A indecent:a improper:a inappropriate:a unseemly:x unbecoming:x
shameful:a disgraceful:a dishonorable:a scandalous:a ignominious:a infamous:a
notorious:a disreputable:a shady:A sleazy:A seedy:A sordid:a squalid:a
sad:A unhappy:A sorrowful:a mournful:a woeful:a doleful:a melancholy:x
gloomy:A glum:A morose:a sullen:a somber:a dreary:A dismal:a bleak:A dark:A
grim:x murky:A dingy:A drab:A colorless:x lifeless:a joyless:a cheerless:a
mirthless:x humorless:x depressed:x dejected:x despondent:a downcast:x
downhearted:x crestfallen:x disheartened:x discouraged:x demoralized:x
dispirited:x heartbroken:x grieving:x bereaved:x anguished:x distressed:x
troubled:x worried:x anxious:a uneasy:a apprehensive:a fearful:a afraid:x
scared:x frightened:x terrified:x petrified:x panicked:x alarmed:x startled:x
spooked:x jittery:A jumpy:A nervous:a tense:A stressed:x strained:x
overwhelmed:x frazzled:x haggard:x weary:a tired:x exhausted:x fatigued:x
drained:x depleted:x spent:x burnout:n listless:a lethargic:a sluggish:a
torpid:a languid:a apathetic:a indifferent:a uncaring:x unfeeling:x callous:a
cold:A icy:A frigid:a frosty:A chilly:A heartless:a soulless:x pitiless:a
merciless:a remorseless:a ruthless:a cruel:A brutal:a savage:a barbaric:x
barbarous:a inhuman:a inhumane:a vicious:a ferocious:a fierce:A violent:a
murderous:a bloodthirsty:x homicidal:x sadistic:a malicious:a malevolent:a
malignant:a spiteful:a vindictive:a vengeful:a hateful:a hostile:a
antagonistic:x adversarial:x belligerent:a combative:x quarrelsome:x
argumentative:x contentious:a cantankerous:x irritable:a grouchy:A grumpy:A
cranky:A crabby:A surly:A testy:A touchy:A prickly:x moody:A temperamental:x
volatile:a explosive:a furious:a enraged:x irate:a livid:x incensed:x
infuriated:x angry:A mad:A wrathful:a indignant:a outraged:x aggravated:x
exasperated:x annoyed:x irritated:x irked:x miffed:x peeved:x vexed:x
displeased:x disgruntled:x discontented:a dissatisfied:x frustrated:x
resentful:a bitter:a embittered:x rancorous:x acrimonious:a spitefulness:x
grudging:x envious:a jealous:a begrudging:x
""".strip()


NEGATIVE_SEEDS_2 = """
dishonest:a deceitful:a deceptive:a misleading:x duplicitous:x twofaced:x
hypocritical:a insincere:a untruthful:a lying:x mendacious:a fraudulent:a
crooked:A corrupt:a venal:a bribable:x underhanded:x devious:a sneaky:A
slippery:A shifty:A untrustworthy:a treacherous:a disloyal:a unfaithful:a
faithless:a perfidious:a traitorous:a backstabbing:x doubledealing:x
conniving:x scheming:x manipulative:a exploitative:x predatory:x parasitic:x
unscrupulous:a unprincipled:a unethical:a immoral:a amoral:a wicked:A evil:x
vile:A villainous:a nefarious:a heinous:a odious:a loathsome:a abhorrent:a
detestable:a despicable:a contemptible:a reprehensible:a deplorable:a
lamentable:a regrettable:a unfortunate:a unlucky:A hapless:a illfated:x
doomed:x cursed:x jinxed:x illstarred:x catastrophic:a disastrous:a
calamitous:a ruinous:a devastating:x destructive:a damaging:x harmful:a
injurious:a detrimental:a deleterious:a pernicious:a noxious:a toxic:a
poisonous:a venomous:a lethal:a deadly:A fatal:a mortal:a dangerous:a
hazardous:a perilous:a risky:A unsafe:a insecure:a precarious:a unprotected:x
vulnerable:a exposed:x threatening:x menacing:x ominous:a sinister:a
foreboding:x dire:x grave:x severe:a harsh:A brutal:x drastic:a extreme:a
excessive:a exorbitant:a extortionate:a outrageous:a unreasonable:a
unjustified:x unwarranted:x unfair:a unjust:a inequitable:a biased:x
prejudiced:x discriminatory:x bigoted:x racist:n sexist:n xenophobic:x
intolerant:a narrowminded:x closedminded:x smallminded:x petty:x parochial:a
provincial:a insular:a myopic:a shortsighted:a imprudent:a unwise:a
illadvised:x misguided:x wrongheaded:x mistaken:x erroneous:a incorrect:a
wrong:x false:a untrue:a baseless:a groundless:a unfounded:x unsupported:x
invalid:a illogical:a irrational:a absurd:a ridiculous:a ludicrous:a
preposterous:a nonsensical:a farcical:a laughable:x foolhardy:x inane:a
fatuous:a asinine:x silly:A frivolous:a flippant:a facetious:a careless:x
expensive:a costly:A pricey:A overpriced:x unaffordable:a uneconomical:a
wasteful:a extravagant:a profligate:a spendthrift:n squandering:x crippling:x
burdensome:a onerous:a oppressive:a punishing:x punitive:a confiscatory:x
usurious:a pricegouging:x gouging:x profiteering:x exploitive:x rigged:x
monopolistic:x cartel:n racket:n swindle:v scam:vd con:vd defraud:v cheat:v
deceive:v dupe:v hoodwink:v bamboozle:v fleece:v bilk:v shortchange:v
overcharge:v extort:v blackmail:v bribe:v embezzle:v launder:v steal:x rob:vd
burgle:v loot:v plunder:v pillage:v pilfer:v poach:v smuggle:v traffic:x
hijack:v kidnap:vd abduct:v ransom:v hostage:n assault:v attack:v ambush:v
assail:v batter:v beat:x bash:v clobber:v pummel:v thrash:v wallop:v maul:v
mangle:v maim:v mutilate:v disfigure:v scar:vd wound:v injure:v hurt:x harm:v
damage:v impair:v weaken:v undermine:v sabotage:v subvert:v destabilize:v
disrupt:v derail:v wreck:v ruin:v destroy:v demolish:v raze:v obliterate:v
annihilate:v eradicate:v exterminate:v decimate:v devastate:v ravage:v
despoil:v defile:v desecrate:v vandalize:v deface:v trash:v litter:v pollute:v
contaminate:v poison:v infect:v sicken:v nauseate:v disgust:v repel:v repulse:v
revolt:v appall:v horrify:v terrify:v frighten:v scare:v intimidate:v menace:v
threaten:v bully:v harass:v hound:v stalk:v pester:v badger:v torment:v
torture:v persecute:v oppress:v tyrannize:v enslave:v subjugate:v dominate:v
coerce:v compel:v force:v strongarm:v browbeat:v humiliate:v shame:v mock:v
ridicule:v deride:v scorn:v taunt:v jeer:v sneer:v scoff:v belittle:v demean:v
degrade:v debase:v disparage:v denigrate:v slander:v libel:v defame:v smear:v
malign:v vilify:v slur:vd insult:v offend:v affront:v snub:vd spurn:v shun:vd
ostracize:v exclude:v reject:v dismiss:v ignore:v neglect:v abandon:v desert:v
forsake:v betray:v doublecross:v backstab:vd
""".strip()


NEGATIVE_SEEDS_3 = """
disaster:n catastrophe:n calamity:n tragedy:n debacle:n fiasco:n meltdown:n
collapse:n breakdown:n failure:n flop:n bust:n dud:n lemon:n washout:n
disappointment:n letdown:n setback:n misfortune:n mishap:n accident:n
emergency:n crisis:x turmoil:n chaos:x mayhem:x havoc:x anarchy:x disorder:n
disarray:x upheaval:n unrest:n strife:n conflict:n clash:n feud:n vendetta:n
war:n battle:n riot:n mutiny:n rebellion:n insurrection:n coup:n violence:x
brutality:x atrocity:n massacre:n slaughter:n carnage:x bloodshed:x genocide:n
murder:n homicide:n assassination:n killing:n death:n demise:x doom:n
destruction:n devastation:x ruination:x wreckage:x rubble:x debris:x
damage:n harm:n injury:n wound:n bruise:n fracture:n trauma:n affliction:n
ailment:n illness:n sickness:n disease:n infection:n epidemic:n plague:n
contagion:n virus:n cancer:n tumor:n wound:x agony:x anguish:x suffering:x
pain:n ache:n torment:n torture:n misery:x distress:n despair:x desperation:x
hopelessness:x gloom:n doldrums:x depression:n melancholia:x sorrow:n grief:n
heartache:n woe:n regret:n remorse:n guilt:n shame:n embarrassment:n
humiliation:n disgrace:n dishonor:n scandal:n infamy:x stigma:n taint:n
blemish:n stain:n smudge:n blot:n flaw:n defect:n fault:n shortcoming:n
weakness:n deficiency:n inadequacy:n failing:n lapse:n error:n mistake:n
blunder:n gaffe:n slip:n oversight:n omission:n miscalculation:n misstep:n
misjudgment:n folly:n stupidity:x idiocy:x absurdity:n nonsense:x drivel:x
rubbish:x garbage:x trash:n junk:n refuse:x filth:x grime:n muck:n sludge:n
slime:n scum:n sewage:x squalor:x stench:n stink:n odor:n reek:v fester:v
rot:vd decay:v decompose:v putrefy:v spoil:v sour:v curdle:v mold:n mildew:n
rust:n corrosion:x blight:n fungus:x infestation:n vermin:x pest:n parasite:n
leech:n rat:n snake:n viper:n skunk:n swine:n brute:n beast:n monster:n
fiend:n demon:n devil:n ogre:n tyrant:n despot:n dictator:n oppressor:n
bully:n thug:n goon:n hooligan:n vandal:n criminal:n felon:n convict:n
outlaw:n crook:n thief:n robber:n burglar:n bandit:n mugger:n pickpocket:n
shoplifter:n swindler:n fraudster:n conman:n charlatan:n impostor:n cheat:n
liar:n perjurer:n traitor:n turncoat:n deserter:n coward:n weakling:n loser:n
quitter:n slacker:n sluggard:n loafer:n idler:n parasite:x freeloader:n
moocher:n scrounger:n leech:x beggar:n pauper:n bankrupt:n debtor:n
poverty:x destitution:x penury:x hardship:n deprivation:n austerity:x
recession:n depression:x slump:n downturn:n stagnation:x inflation:x
hyperinflation:x devaluation:n deficit:n debt:n arrears:x default:n
bankruptcy:n insolvency:x foreclosure:n repossession:n eviction:n
homelessness:x unemployment:x layoff:n redundancy:n shortage:n scarcity:x
drought:n famine:n starvation:x hunger:n malnutrition:x blackout:n outage:n
shutdown:n stoppage:n strike:n boycott:n embargo:n sanction:n penalty:n
fine:n forfeit:n surcharge:n markup:n hike:n overrun:n ripoff:n
extortion:x blackmail:x bribery:x corruption:x graft:x embezzlement:x
fraud:n forgery:n counterfeit:n fake:n sham:n hoax:n ploy:n ruse:n trick:n
trap:n snare:n pitfall:n hazard:n danger:n peril:n menace:n threat:n risk:n
liability:n drawback:n downside:n disadvantage:n handicap:n obstacle:n
hindrance:n impediment:n barrier:n bottleneck:n burden:n millstone:n
albatross:n curse:n bane:n scourge:n nightmare:n ordeal:n plight:n
predicament:n quagmire:n morass:n mess:n muddle:n tangle:n snarl:n jumble:n
glitch:n bug:n malfunction:n breakdown:x crash:n freeze:v stall:v lag:vd
grumble:v gripe:v whine:v moan:v groan:v wail:v sob:vd weep:x cry:v lament:v
bemoan:v bewail:v complain:v protest:v object:v oppose:v resist:v defy:v
disobey:v violate:v infringe:v transgress:v trespass:v offendable:x
dread:v fear:v worry:v fret:vd agonize:v despair:v panic:x suffer:v endure:x
languish:v wither:v wilt:v fade:v dwindle:v shrink:x shrivel:v stagnate:v
deteriorate:v degenerate:v decline:v worsen:v regress:v relapse:v backslide:x
fail:v falter:v flounder:v stumble:v trip:vd fall:x tumble:v plummet:v
plunge:v sink:x drown:v choke:v suffocate:v strangle:v smother:v stifle:v
suppress:v censor:v silence:v muzzle:v gag:vd restrict:v constrain:v confine:v
imprison:v incarcerate:v detain:v arrest:v indict:v prosecute:v convict:v
sentence:v punish:v penalize:v sanction:v censure:v reprimand:v rebuke:v
scold:v chide:v berate:v lambaste:v castigate:v admonish:v blame:v accuse:v
incriminate:v implicate:v suspect:v distrust:v mistrust:v doubt:v question:x
dispute:v contest:v contradict:v deny:v refute:v rebut:vd renounce:v
repudiate:v disavow:v disown:v revoke:v rescind:v cancel:v annul:vd void:v
nullify:v invalidate:v disqualify:v demote:v downgrade:v diminish:v lessen:v
devalue:v depreciate:v cheapen:v erode:v corrode:v dilute:v taint:v sully:v
tarnish:v besmirch:v discredit:v dishonor:v
""".strip()


# Real English negatives formed from positive bases; kept as explicit seeds so
# only genuine words enter the list.
NEGATIVE_SEEDS_UN = """
unfair:a unkind:a unsafe:a unclean:a unhappy:A unwise:a unstable:a unsteady:a
unreliable:a unhealthy:A unhelpful:a unfriendly:a unpleasant:a uncomfortable:x
uncooperative:x unproductive:a unprofitable:x unsuccessful:a unsatisfying:x
unsatisfactory:x unacceptable:a unsuitable:a unfit:x unworthy:a undesirable:a
unwelcome:x unwanted:x unloved:x unappreciated:x unimpressive:x unattractive:a
unremarkable:a uninspiring:x uninteresting:x unconvincing:x unbelieving:x
unrealistic:a impractical:a inefficient:a ineffective:a incapable:x
incompetently:x inconsiderate:a inattentive:a impatient:a intolerable:a
insensitive:a indifferently:x inflexible:a inhospitable:x insecurely:x
imprecise:a inaccurate:a inexact:x improperly:x unsound:a unsightly:x
untidy:A disorganized:x disorderly:x dysfunctional:a unusable:x unworkable:x
unjustifiable:x indefensible:x inexcusable:a unforgivable:a irresponsible:a
undependable:x untrusting:x distasteful:a displeasing:x discomforting:x
disagreeable:a discouraging:x disheartening:x dismaying:x disillusioning:x
disappointing:x dissatisfying:x disturbing:x unsettling:x worrisome:a
troublesome:a troubling:x vexing:x galling:x maddening:x infuriating:x
enraging:x exasperating:x aggravating:x irritating:x annoying:x bothersome:a
tiresome:a wearisome:a tedious:a monotonous:a dull:A boring:x bland:A
insipid:a vapid:a stale:A tasteless:a flavorless:x unpalatable:a inedible:x
unappetizing:x sickening:x nauseating:x
""".strip()


NEGATIVE_SEEDS_4 = """
abject:a abnormal:a abominable:a abrasive:a abrupt:a absent:x absentminded:x
abysmally:x accusatory:x acerbic:a acidic:x acrid:a adverse:a alarming:x
alienating:x aloof:a ambiguous:a anemic:a anticlimactic:x antiquated:x
antisocial:x apocalyptic:x appalled:x arbitrary:a archaic:x artificial:a
ashamed:x audacious:a austere:a backward:a baffling:x banal:a barren:a
bearish:x bedraggled:x befuddled:x bewildering:x bizarre:a blatant:a
bloated:x blundering:x blurry:A bogus:x bombastic:a bored:x brash:A brazen:a
broke:x bumpy:A bureaucratic:x burdened:x cagey:A cataclysmic:x chaotic:a
cheerlessly:x chronic:a clueless:x clumsier:x cluttered:x coercive:a
combustible:x complacent:a complicit:x compulsive:a confused:x confusing:x
congested:x contagious:x contaminated:x contradictory:x convoluted:a
corrosive:a counterfeit:x counterproductive:x cowardly:x cramped:x crippled:x
cryptic:a cumbersome:a cutthroat:x cynical:a damning:x daunting:x deadlocked:x
debatable:x debilitating:x deceased:x defeated:x defensive:a defiant:a
deformed:x defunct:x dehumanizing:x delinquent:a delirious:a deluded:x
demonic:a demoralizing:x deplorably:x depraved:a depressing:x deranged:x
derelict:x desolate:a desperate:a despondently:x detached:x detained:x
dejectedly:x diabolical:a dilatory:x diminished:x disconnected:x discordant:a
disgraced:x disgusted:x dishonored:x disjointed:a dislocated:x dismayed:x
disoriented:x dispassionate:a disposable:x disproportionate:a disquieting:x
dissonant:x distant:a distorted:x distraught:x distressing:x divisive:a
dizzy:A dogmatic:a doomed:x dour:A draconian:x dubious:a dysfunctionally:x
eerie:a egregious:a elusive:a enfeebled:x entangled:x erratically:x evasive:a
exclusionary:x exhausting:x exploited:x explosive:x extravagantly:x
fallacious:a fanatical:a farfetched:x fatalistic:x fearsome:a feckless:a
feverish:a fickle:a flagrant:a flaky:A flawedly:x forbidding:x forgetful:a
forlorn:a fractious:a fraudulently:x frightful:a frustrating:x glaring:x
gratuitous:a grievous:a grisly:A gruesome:a grueling:x gruff:A guilty:x
gullible:a haphazard:a hardheaded:x harrowing:x hateful:x hazy:A heavyhanded:x
hellish:a hesitant:a hollow:a horrifying:x humiliated:x hysterical:a
illegal:a illegitimate:a illicit:a illiterate:a imaginary:x immature:a
imminent:x impaired:x impassive:a impervious:x impetuous:a implausible:a
imposing:x impossible:a impoverished:x impulsive:a inactive:a inadmissible:x
inadvisable:x inane:x inapt:a incendiary:x incessant:a incoherent:a
incomplete:a incomprehensible:x inconclusive:a incongruous:a inconvenient:a
indecisive:a indifferent:x indignantly:x indiscreet:a indolent:a inert:a
infeasible:x inferiorly:x infernal:a infirm:x inflammatory:x inflated:x
inglorious:x inhibited:x inimical:x iniquitous:a injured:x inoperable:x
inopportune:a insidious:a insipidly:x insolvent:x insubordinate:x
insufferable:a insulting:a intrusive:a invasive:x irascible:a irksome:a
ironic:x irrational:x irreconcilable:x irredeemable:x irregular:a irrelevant:a
irreparable:x irreversible:x isolated:x jaded:x jarring:x jaundiced:x
joyless:x labored:x lackadaisical:a lackluster:x laggard:n lawless:a lax:A
leaky:A lifelessly:x limp:A listlessly:x lonely:x lonesome:a longwinded:x
lopsided:a ludicrously:x lukewarm:a lurid:a macabre:x malcontent:n
malformed:x malnourished:x manipulated:x marginal:a meaningfully:x meek:A
melodramatic:a menial:a merciful:x messy:A mindnumbing:x mismanaged:x
misplaced:x muddled:x muddy:A mundane:a murky:x mysterious:a naive:a nasty:A
nefariously:x negligible:a nervously:x neurotic:a niggling:x nitpicking:x
noisy:A nonchalant:a noncompliant:x nondescript:x nosy:A objectionable:a
oblique:a oblivious:a obnoxious:a obscure:a obsolete:x obstinate:a
obstructive:a offhand:x oily:A ominously:x onerously:x opaque:a
opinionated:x opportunistic:x oppressively:x outdated:x outmoded:x overbearing:x
overblown:x overcast:x overcrowded:x overdue:x overheated:x overpricing:x
overrated:x overwrought:x painful:a panicky:x paranoid:a pathetic:a
peculiar:a perfunctory:a perilously:x perplexing:x pessimistic:a pesky:A
petulant:a phony:A pitiful:a plaintive:a pointlessly:x polluted:x
ponderous:a powerlessly:x precariously:x predatorily:x premature:a
preoccupied:x pressured:x presumptuous:a pretentiously:x primitive:a
problematic:a prohibitive:a protracted:x pushy:A puzzling:x quarrelsomely:x
questionable:a rabid:a rampant:x rancid:a rankled:x rattled:x raucous:a
ravaged:x rebellious:a recalcitrant:x redundant:a regressive:a remiss:x
remorseful:a repellent:a repetitive:a reprehensibly:x repressive:a
repugnant:a restless:a restrictive:a rigid:a rocky:A rotten:A rough:A rowdy:A
rudely:x rueful:a rumpled:x rusty:A ruthlessly:x scandalously:x scathing:x
sceptical:x scrawny:A secretive:a selfdestructive:x senile:x shaken:x
shallow:A shambolic:x shameless:a shocking:x shortstaffed:x sick:A sickly:A
simplistic:a sinister:x skeptical:a slanderous:a slick:A slow:A sluggishly:x
smoggy:A smug:x sneaking:x soggy:A sore:A spartan:x spoiled:x spooky:A
spotty:A stagnant:a stark:A sterile:a stern:A sticky:A stiff:A stilted:x
stormy:A strenuous:a stressful:a strident:a stubborn:a stuffy:A subdued:x
submissive:a subpar:x superficial:a superfluous:a suspicious:a sweltering:x
tacky:A tactless:a tardy:A tattered:a tawdry:A tearful:a temperamentally:x
tentative:a tepid:a terse:A thankless:x thorny:A tightfisted:x timid:A
tiring:x tragic:a traumatic:a treacherously:x tricky:A trite:A truculent:a
turbulent:a twisted:x tyrannical:a unbearable:a uncertain:a uncharitable:a
uncompetitive:x uncompromising:x unconvinced:x underfunded:x underhand:x
underpaid:x underperforming:x underwhelming:x uneven:a unforeseen:x
ungrateful:a uninformed:x uninspired:x unintelligible:x unlawful:a unmanageable:x
unnatural:a unnecessary:x unpopular:a unprepared:x unprofessional:a
unresponsive:a unruly:x untenable:x untimely:x untoward:x unyielding:x
uptight:x vacuous:a vague:A vengefully:x venomously:x vexatious:a vindictively:x
volatilely:x vulgarly:x warped:x wary:A washedout:x wasteful:x wayward:a
wearying:x wildly:x wily:A wintry:A wishywashy:x witless:a wobbling:x woeful:x
wretched:a yucky:A zealotry:x
abase:v abhor:vd abolish:v aggravate:v agitate:v alarm:v alienate:v anger:v
antagonize:v appal:vd avert:v avoid:v banish:v bark:v bemuse:v bicker:v
blacklist:v blackout:x bombard:v botch:v boycott:v breach:v bristle:v bungle:v
castoff:x censure:x chastise:v cheapens:x collude:v commiserate:v condemn:v
confound:v confuse:v conspire:v cower:v cringe:v criticize:v crumble:v crush:v
curse:v curtail:v deceives:x decry:v deduct:v deflate:v defund:v degenerates:x
delay:v delude:v demonize:v demoralize:v denounce:v deny:x deplete:v deplore:v
deprive:v despise:v detain:x deter:vd detract:v devolve:v dictate:v disable:v
disappoint:v disapprove:v disband:v discard:v discourage:v disdain:v
disenfranchise:v dishearten:v disintegrate:v dislike:v dismantle:v dismay:v
disregard:v dissent:v dissolve:v distort:v distract:v distress:v disturb:v
divide:v dodge:v dominate:x downsize:v dread:x dump:v embroil:v encroach:v
endanger:v enrage:v entrap:vd evade:v evict:v exacerbate:v exclude:x
excoriate:v exhaust:v expel:vd expire:v expose:v fabricate:v fumble:v gamble:v
grate:v grouse:v growl:v grub:vd grunt:v hamper:v handicap:vd harangue:v
hate:v heckle:v hinder:v hoard:v hobble:v impair:x impede:v impose:v
incite:v inconvenience:v infest:v inflame:v inflict:v infuriate:v instigate:v
interfere:v interrupt:v intrude:v irritate:v jeopardize:v lash:v loathe:v
lose:x lurk:v meddle:v mishandle:v misinform:v misinterpret:v mislead:x
mismanage:v misread:x misrepresent:v miss:v mistreat:v misuse:v mock:x
nag:vd obstruct:v offload:v outlaw:v overburden:v overcomplicate:v overload:v
overreach:v overreact:v overspend:x overstate:v overtax:v overturn:v overwhelm:v
penalise:v pervert:v plague:v plot:vd pressure:v provoke:v punish:x quarrel:v
quibble:v rage:v rant:v rebuff:v recoil:v refuse:v regret:vd reject:x relegate:v
renege:v repress:v reproach:v repudiates:x resent:v resign:v restrict:x retaliate:v
retract:v revile:v revolt:x roil:v ransack:v scapegoat:v scrap:vd scream:v
screech:v seethe:v shatter:v shirk:v shout:v shove:v shun:x slam:vd slash:v
spurn:x squabble:v squander:v stereotype:v stretch:x struggle:v subtract:v
sue:v sulk:v suspect:x swamp:v tank:v tease:v thwart:v trample:v tremble:v
trick:v trivialize:v undercut:v underestimate:v undermine:x underpay:v
unsettle:v uproot:v upset:x vanish:v veto:v victimize:v waffle:v wail:x
waste:v weep:v whimper:v wrangle:v wrestle:v yell:v
""".strip()


def build(seed_blocks, exclude=frozenset()):
    """Expand seed blocks into (bases, derived) sets, minus excluded words."""
    bases, derived = set(), set()
    for block in seed_blocks:
        for word, tag in parse_seeds(block):
            base, forms = expand(word, tag)
            bases.add(base)
            derived.update(forms)
    bases -= exclude
    derived -= bases | exclude
    return bases, derived


def finalize(bases, derived, target, name):
    """Keep all bases, pad with sorted derived forms to the exact target size."""
    if len(bases) > target:
        raise SystemExit(f"{name}: {len(bases)} base words exceed target {target}")
    pool = sorted(derived)
    need = target - len(bases)
    if need > len(pool):
        raise SystemExit(
            f"{name}: need {need} derived forms but only {len(pool)} available"
        )
    chosen = bases | set(pool[:need])
    assert len(chosen) == target
    return sorted(chosen)


def write_list(path, words, polarity):
    lines = [
        f"; Bundled English {polarity} opinion words ({len(words)} entries).",
        "; One word per line; lines starting with ';' are comments.",
        "; Generated by tools/gen_lexicon.py - regenerate rather than hand-edit.",
    ]
    lines.extend(words)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main():
    pos_bases, pos_derived = build([POSITIVE_SEEDS])
    positive = finalize(pos_bases, pos_derived, POSITIVE_TARGET, "positive")
    pos_set = set(positive)

    neg_bases, neg_derived = build(
        [NEGATIVE_SEEDS_1, NEGATIVE_SEEDS_2, NEGATIVE_SEEDS_3,
         NEGATIVE_SEEDS_4, NEGATIVE_SEEDS_UN],
        exclude=pos_set,
    )
    negative = finalize(neg_bases, neg_derived, NEGATIVE_TARGET, "negative")

    assert not pos_set & set(negative), "lists must be disjoint"
    assert all(_WORD_RE.match(w) for w in positive + negative)

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    write_list(OUT_DIR / "positive-words.txt", positive, "positive")
    write_list(OUT_DIR / "negative-words.txt", negative, "negative")
    print(f"positive: {len(positive)}  negative: {len(negative)}  "
          f"total: {len(positive) + len(negative)}")


if __name__ == "__main__":
    main()
