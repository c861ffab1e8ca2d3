// Generated by tools/gen_lexicon_header.py from the files under data/.
// Do not edit by hand; edit the word lists and regenerate.
#pragma once

#include <string_view>

namespace reprosig::detail {

inline constexpr std::string_view easy_word_list[] = {
    "a", "able", "about", "above", "across", "act", "add", "afraid", "after",
    "afternoon", "again", "against", "age", "ago", "agree", "air", "all",
    "almost", "alone", "along", "already", "also", "always", "am", "among",
    "an", "and", "angry", "animal", "another", "answer", "any", "anyone",
    "anything", "appear", "apple", "are", "arm", "around", "arrive", "art",
    "as", "ask", "at", "ate", "away", "baby", "back", "bad", "bag", "ball",
    "band", "bank", "base", "basket", "be", "bean", "bear", "beat",
    "beautiful", "became", "because", "become", "bed", "been", "before",
    "began", "begin", "behind", "being", "believe", "bell", "belong", "below",
    "beside", "best", "better", "between", "big", "bird", "bit", "black",
    "blood", "blow", "blue", "board", "boat", "body", "bone", "book", "born",
    "both", "bottle", "bottom", "box", "boy", "branch", "brave", "bread",
    "break", "breakfast", "bridge", "bright", "bring", "broke", "broken",
    "brother", "brought", "brown", "build", "burn", "bus", "busy", "but",
    "buy", "by", "cake", "call", "came", "can", "cap", "captain", "car",
    "card", "care", "careful", "carry", "case", "cat", "catch", "cattle",
    "caught", "cause", "cent", "center", "chair", "chance", "change", "chief",
    "child", "children", "choose", "circle", "city", "class", "clean",
    "clear", "climb", "clock", "close", "cloth", "clothes", "cloud", "coat",
    "cold", "color", "come", "common", "company", "consider", "contain",
    "continue", "cook", "cool", "corn", "corner", "cost", "cotton", "could",
    "count", "country", "course", "cover", "cow", "cried", "cross", "crowd",
    "cry", "cup", "cut", "dance", "dark", "day", "dead", "deal", "dear",
    "decide", "deep", "did", "die", "different", "dinner", "direction",
    "distance", "do", "doctor", "does", "dog", "dollar", "done", "door",
    "double", "down", "draw", "dream", "dress", "drink", "drive", "drop",
    "dry", "during", "dust", "each", "ear", "early", "earth", "east", "easy",
    "eat", "edge", "egg", "eight", "either", "else", "end", "enemy", "enjoy",
    "enough", "enter", "even", "evening", "ever", "every", "everyone",
    "everything", "exact", "except", "expect", "explain", "eye", "face",
    "fact", "fair", "fall", "family", "famous", "far", "farm", "farmer",
    "fast", "fat", "father", "fear", "feed", "feel", "feet", "fell", "felt",
    "fence", "few", "field", "fight", "figure", "fill", "final", "find",
    "fine", "finger", "finish", "fire", "first", "fish", "fit", "five", "fix",
    "flat", "floor", "flower", "fly", "follow", "food", "foot", "for",
    "force", "forest", "forget", "form", "found", "four", "free", "fresh",
    "friend", "from", "front", "fruit", "full", "fun", "funny", "further",
    "game", "garden", "gate", "gave", "general", "gentle", "get", "gift",
    "girl", "give", "glad", "glass", "go", "goes", "gold", "gone", "good",
    "got", "grass", "gray", "great", "green", "grew", "ground", "group",
    "grow", "guess", "had", "hair", "half", "hall", "hand", "happen", "happy",
    "hard", "has", "hat", "have", "he", "head", "hear", "heard", "heart",
    "heat", "heavy", "held", "help", "her", "here", "hers", "herself", "high",
    "hill", "him", "himself", "his", "history", "hit", "hold", "hole", "home",
    "hope", "horse", "hot", "hour", "house", "how", "however", "hundred",
    "hungry", "hurry", "hurt", "i", "ice", "idea", "if", "important", "in",
    "inch", "indeed", "inside", "instead", "into", "iron", "is", "island",
    "it", "its", "itself", "job", "join", "jump", "just", "keep", "kept",
    "key", "kill", "kind", "king", "kitchen", "knew", "know", "known",
    "ladder", "lady", "lake", "land", "language", "large", "last", "late",
    "laugh", "law", "lay", "lead", "learn", "least", "leave", "led", "left",
    "leg", "less", "let", "letter", "level", "lie", "life", "lift", "light",
    "like", "line", "lion", "list", "listen", "little", "live", "long",
    "look", "lost", "lot", "loud", "love", "low", "machine", "made", "mail",
    "main", "make", "man", "many", "map", "mark", "market", "master",
    "matter", "may", "maybe", "me", "mean", "measure", "meat", "meet",
    "member", "men", "met", "middle", "might", "mile", "milk", "mind", "mine",
    "minute", "miss", "moment", "money", "month", "moon", "more", "morning",
    "most", "mother", "mountain", "mouth", "move", "much", "music", "must",
    "my", "myself", "name", "near", "nearly", "neck", "need", "neighbor",
    "neither", "never", "new", "news", "next", "nice", "night", "nine", "no",
    "noise", "none", "noon", "nor", "north", "nose", "not", "note", "nothing",
    "notice", "now", "number", "ocean", "of", "off", "office", "often", "oh",
    "oil", "old", "on", "once", "one", "only", "open", "or", "order", "other",
    "our", "out", "outside", "over", "own", "page", "paint", "pair", "paper",
    "part", "party", "pass", "past", "pay", "peace", "pen", "people",
    "perhaps", "person", "pick", "picture", "piece", "place", "plain", "plan",
    "plant", "play", "please", "plenty", "point", "poor", "possible", "pound",
    "prepare", "present", "president", "pretty", "probably", "problem",
    "promise", "proud", "prove", "pull", "push", "put", "question", "quick",
    "quiet", "quite", "rabbit", "race", "rain", "raise", "ran", "reach",
    "read", "ready", "real", "reason", "receive", "red", "remember", "rest",
    "return", "rich", "ride", "right", "ring", "rise", "river", "road",
    "rock", "roll", "roof", "room", "round", "row", "rule", "run", "sad",
    "safe", "said", "sail", "salt", "same", "sand", "sat", "save", "saw",
    "say", "school", "sea", "season", "seat", "second", "see", "seed", "seem",
    "seen", "self", "sell", "send", "sense", "sent", "serve", "set", "seven",
    "several", "shall", "shape", "share", "she", "sheep", "ship", "shoe",
    "shop", "short", "should", "show", "sick", "side", "sign", "silver",
    "simple", "since", "sing", "sister", "sit", "six", "size", "sky", "sleep",
    "slow", "small", "smile", "snow", "so", "soft", "some", "someone",
    "something", "sometimes", "son", "song", "soon", "sort", "sound", "south",
    "space", "speak", "special", "spend", "spoke", "sport", "spot", "spread",
    "spring", "square", "stand", "star", "start", "state", "station", "stay",
    "step", "stick", "still", "stone", "stood", "stop", "store", "storm",
    "story", "straight", "strange", "street", "strong", "study", "such",
    "sudden", "sugar", "summer", "sun", "supper", "sure", "surprise", "sweet",
    "swim", "table", "tail", "take", "talk", "tall", "taste", "teach",
    "teacher", "team", "tell", "ten", "test", "than", "thank", "that", "the",
    "their", "them", "then", "there", "these", "they", "thick", "thin",
    "thing", "think", "third", "this", "those", "though", "thought",
    "thousand", "three", "through", "throw", "thus", "tie", "till", "time",
    "tiny", "to", "today", "together", "told", "tomorrow", "too", "took",
    "top", "touch", "toward", "town", "trade", "train", "travel", "tree",
    "trip", "trouble", "true", "try", "turn", "twelve", "twenty", "two",
    "under", "understand", "until", "up", "upon", "us", "use", "usual",
    "valley", "very", "visit", "voice", "wait", "walk", "wall", "want", "war",
    "warm", "was", "wash", "watch", "water", "wave", "way", "we", "wear",
    "weather", "week", "well", "went", "were", "west", "wet", "what", "wheel",
    "when", "where", "whether", "which", "while", "white", "who", "whole",
    "whose", "why", "wide", "wife", "wild", "will", "win", "wind", "window",
    "winter", "wish", "with", "within", "without", "woman", "women", "wonder",
    "wood", "word", "wore", "work", "world", "would", "write", "wrong",
    "wrote", "yard", "year", "yellow", "yes", "yesterday", "yet", "you",
    "young", "your", "yourself",
};

inline constexpr std::string_view positive_word_list[] = {
    "accurate", "achievement", "admirable", "advantage", "agreeable",
    "amazing", "appealing", "appreciate", "attractive", "beautiful",
    "beneficial", "benefit", "best", "better", "bright", "brilliant", "calm",
    "capable", "charming", "cheerful", "clean", "clear", "clever", "coherent",
    "comfortable", "commendable", "compelling", "competent", "complete",
    "comprehensive", "confident", "consistent", "convenient", "convincing",
    "correct", "creative", "delightful", "dependable", "desirable", "eager",
    "easy", "effective", "efficient", "elegant", "enjoy", "enjoyable",
    "enthusiastic", "excellent", "exceptional", "exciting", "fabulous",
    "fair", "fast", "favorable", "favorite", "fine", "flawless", "flexible",
    "fortunate", "fresh", "friendly", "fruitful", "fun", "generous", "gentle",
    "genuine", "glad", "good", "graceful", "grateful", "happy", "harmonious",
    "healthy", "helpful", "honest", "hopeful", "ideal", "impressive",
    "improved", "innovative", "insightful", "inspiring", "intuitive", "joy",
    "joyful", "kind", "lovely", "loyal", "lucky", "marvelous", "meaningful",
    "merit", "modern", "neat", "nice", "notable", "novel", "optimal",
    "outstanding", "perfect", "pleasant", "pleased", "pleasing", "positive",
    "powerful", "practical", "praise", "precise", "productive",
    "professional", "progress", "promising", "prompt", "proper", "proud",
    "quick", "reliable", "remarkable", "resilient", "rigorous", "robust",
    "satisfying", "seamless", "secure", "sensible", "significant", "simple",
    "sincere", "skillful", "smart", "smooth", "solid", "sound", "splendid",
    "stable", "strong", "succeed", "success", "successful", "superb",
    "superior", "supportive", "sweet", "terrific", "thorough", "thoughtful",
    "thriving", "tidy", "trustworthy", "useful", "valuable", "versatile",
    "vibrant", "warm", "welcome", "wonderful", "worthy",
};

inline constexpr std::string_view negative_word_list[] = {
    "abysmal", "annoying", "awful", "awkward", "bad", "bleak", "broken",
    "buggy", "burden", "careless", "chaotic", "clumsy", "complicated",
    "confusing", "corrupt", "costly", "crash", "crude", "cruel", "damage",
    "damaged", "dangerous", "dead", "defective", "deficient", "difficult",
    "dirty", "disappointing", "disaster", "dishonest", "dismal", "disturbing",
    "doubt", "doubtful", "dreadful", "dull", "erratic", "error", "evil",
    "excessive", "fail", "failure", "fake", "fatal", "fault", "faulty",
    "fear", "fearful", "flaw", "flawed", "fragile", "fraudulent",
    "frustrating", "grim", "gross", "harm", "harmful", "harsh", "hate",
    "hopeless", "horrible", "hostile", "ill", "impossible", "inaccurate",
    "inadequate", "incoherent", "incompetent", "incomplete", "inconsistent",
    "incorrect", "inferior", "insecure", "insufficient", "invalid", "lack",
    "lacking", "lazy", "limited", "lose", "loss", "lousy", "mediocre", "mess",
    "messy", "miserable", "misleading", "missing", "mistake", "nasty",
    "negative", "noisy", "obscure", "obsolete", "offensive", "painful",
    "pathetic", "pointless", "problematic", "questionable", "redundant",
    "regret", "rough", "rude", "ruin", "severe", "shabby", "shaky", "sloppy",
    "slow", "sorry", "stale", "stupid", "suspect", "suspicious", "tedious",
    "terrible", "toxic", "tragic", "trouble", "ugly", "unable",
    "unacceptable", "unclear", "uncomfortable", "unfair", "unfortunate",
    "unhappy", "unhealthy", "unpleasant", "unreliable", "unsafe", "unstable",
    "unusable", "useless", "vague", "violent", "weak", "weird", "worse",
    "worst", "worthless",
};

}  // namespace reprosig::detail
