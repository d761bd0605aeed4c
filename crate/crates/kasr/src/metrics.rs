//! Edit-distance counts, WER/CER, and Japanese text normalization.
//!
//! WER = (S + D + I) / N over tokens, CER = (S + D + I) / C over code
//! points, where S/D/I come from a unit-cost Levenshtein alignment and
//! N/C are reference lengths. Both are micro-averaged at corpus level:
//! summed counts divided by summed reference length, never the mean of
//! per-utterance rates.

use crate::error::{Error, Result};
use unicode_normalization::UnicodeNormalization;
use unicode_properties::{GeneralCategoryGroup, UnicodeGeneralCategory};

/// S/D/I decomposition of one Levenshtein alignment plus the reference
/// length at the granularity it was computed (words for WER, characters
/// for CER).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EditCounts {
    pub substitutions: usize,
    pub deletions: usize,
    pub insertions: usize,
    pub ref_len: usize,
}

impl EditCounts {
    /// S + D + I; equals the minimal edit distance between the sequences.
    pub fn total_edits(&self) -> usize {
        self.substitutions + self.deletions + self.insertions
    }

    /// (S + D + I) / ref_len. Callers must handle ref_len = 0 themselves.
    pub fn rate(&self) -> f64 {
        self.total_edits() as f64 / self.ref_len as f64
    }

    pub fn accumulate(&mut self, other: &EditCounts) {
        self.substitutions += other.substitutions;
        self.deletions += other.deletions;
        self.insertions += other.insertions;
        self.ref_len += other.ref_len;
    }
}

/// Unit-cost Levenshtein with a deterministic backtrace.
///
/// Tie order when several alignments are minimal: match/substitution
/// first, then deletion, then insertion, so the S/D/I split is
/// reproducible even when the optimal alignment is not unique.
pub fn edit_counts<T: PartialEq>(reference: &[T], hypothesis: &[T]) -> EditCounts {
    let n = reference.len();
    let m = hypothesis.len();

    // d[i][j] = distance between reference[..i] and hypothesis[..j]
    let mut d = vec![0u32; (n + 1) * (m + 1)];
    let idx = |i: usize, j: usize| i * (m + 1) + j;
    for i in 0..=n {
        d[idx(i, 0)] = i as u32;
    }
    for j in 0..=m {
        d[idx(0, j)] = j as u32;
    }
    for i in 1..=n {
        for j in 1..=m {
            let sub_cost = u32::from(reference[i - 1] != hypothesis[j - 1]);
            let diag = d[idx(i - 1, j - 1)] + sub_cost;
            let del = d[idx(i - 1, j)] + 1;
            let ins = d[idx(i, j - 1)] + 1;
            d[idx(i, j)] = diag.min(del).min(ins);
        }
    }

    let mut counts = EditCounts {
        ref_len: n,
        ..Default::default()
    };
    let (mut i, mut j) = (n, m);
    while i > 0 || j > 0 {
        let cur = d[idx(i, j)];
        if i > 0 && j > 0 {
            let sub_cost = u32::from(reference[i - 1] != hypothesis[j - 1]);
            if d[idx(i - 1, j - 1)] + sub_cost == cur {
                if sub_cost == 1 {
                    counts.substitutions += 1;
                }
                i -= 1;
                j -= 1;
                continue;
            }
        }
        if i > 0 && d[idx(i - 1, j)] + 1 == cur {
            counts.deletions += 1;
            i -= 1;
            continue;
        }
        counts.insertions += 1;
        j -= 1;
    }
    counts
}

/// Extra Japanese punctuation stripped explicitly on top of the Unicode
/// punctuation categories (all of these are in category P anyway; the
/// list keeps the contract visible).
const JA_PUNCT: &[char] = &[
    '、', '。', '「', '」', '『', '』', '・', '！', '？', '…',
];

fn is_stripped(c: char) -> bool {
    c.general_category_group() == GeneralCategoryGroup::Punctuation || JA_PUNCT.contains(&c)
}

fn normalize_pass(text: &str) -> String {
    text.nfkc()
        .filter(|c| !is_stripped(*c))
        .filter(|c| !c.is_whitespace())
        .flat_map(char::to_lowercase)
        .collect()
}

/// Text normalization for scoring: NFKC (folds full-width/half-width
/// forms), strip punctuation and all whitespace, lowercase letters.
///
/// Removing code points can expose combining marks to new base
/// characters, which NFKC would then compose differently, so the pass is
/// repeated until the string is stable. That makes the function
/// idempotent by construction.
pub fn normalize_ja(text: &str) -> String {
    let mut current = normalize_pass(text);
    for _ in 0..8 {
        let next = normalize_pass(&current);
        if next == current {
            break;
        }
        current = next;
    }
    current
}

/// Splits text into scoring tokens for WER.
pub trait Segmenter {
    fn segment(&self, text: &str) -> Vec<String>;
}

/// Splits on Unicode whitespace; for references that are already
/// space-separated. Useless after [`normalize_ja`], which removes スペース.
pub struct WhitespaceSegmenter;

impl Segmenter for WhitespaceSegmenter {
    fn segment(&self, text: &str) -> Vec<String> {
        text.split_whitespace().map(str::to_string).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ScriptClass {
    Han,
    Hiragana,
    Katakana,
    Latin,
    Digit,
    Other,
}

fn script_class(c: char) -> ScriptClass {
    match c {
        '\u{3040}'..='\u{309F}' => ScriptClass::Hiragana,
        // Includes the prolonged sound mark ー and small kana extensions.
        '\u{30A0}'..='\u{30FF}' | '\u{31F0}'..='\u{31FF}' | '\u{FF66}'..='\u{FF9D}' => {
            ScriptClass::Katakana
        }
        // CJK unified ideographs, extension A, compatibility ideographs,
        // the iteration mark 々 and the ideographic zero 〇.
        '\u{4E00}'..='\u{9FFF}'
        | '\u{3400}'..='\u{4DBF}'
        | '\u{F900}'..='\u{FAFF}'
        | '\u{3005}'
        | '\u{3007}' => ScriptClass::Han,
        'A'..='Z' | 'a'..='z' | '\u{00C0}'..='\u{024F}' => ScriptClass::Latin,
        '0'..='9' => ScriptClass::Digit,
        _ => ScriptClass::Other,
    }
}

/// Dictionary-free segmenter: consecutive characters of the same script
/// class (kanji / hiragana / katakana / latin / digit / other) form one
/// token. "私はAIです" → [私, は, AI, です].
pub struct ScriptRunSegmenter;

impl Segmenter for ScriptRunSegmenter {
    fn segment(&self, text: &str) -> Vec<String> {
        let mut tokens = Vec::new();
        let mut run = String::new();
        let mut run_class = None;
        for c in text.chars() {
            let class = script_class(c);
            if run_class == Some(class) {
                run.push(c);
            } else {
                if !run.is_empty() {
                    tokens.push(std::mem::take(&mut run));
                }
                run.push(c);
                run_class = Some(class);
            }
        }
        if !run.is_empty() {
            tokens.push(run);
        }
        tokens
    }
}

fn rate_of(counts: &EditCounts, hyp_len: usize) -> Result<f64> {
    if counts.ref_len == 0 {
        if hyp_len == 0 {
            return Ok(0.0);
        }
        return Err(Error::EmptyReference);
    }
    Ok(counts.rate())
}

/// Character error rate over Unicode code points. Callers are expected
/// to have normalized both sides (see [`normalize_ja`]); the inputs are
/// scored as given. CER may exceed 1 when the hypothesis inserts more
/// characters than the reference holds.
pub fn cer(reference: &str, hypothesis: &str) -> Result<f64> {
    let counts = char_edit_counts(reference, hypothesis);
    rate_of(&counts, hypothesis.chars().count())
}

/// [`edit_counts`] over code points, keeping the full S/D/I split.
pub fn char_edit_counts(reference: &str, hypothesis: &str) -> EditCounts {
    let r: Vec<char> = reference.chars().collect();
    let h: Vec<char> = hypothesis.chars().collect();
    edit_counts(&r, &h)
}

/// Word error rate over segmenter tokens. Inputs are scored as given.
pub fn wer(reference: &str, hypothesis: &str, segmenter: &dyn Segmenter) -> Result<f64> {
    let counts = word_edit_counts(reference, hypothesis, segmenter);
    rate_of(&counts, segmenter.segment(hypothesis).len())
}

/// [`edit_counts`] over segmenter tokens.
pub fn word_edit_counts(
    reference: &str,
    hypothesis: &str,
    segmenter: &dyn Segmenter,
) -> EditCounts {
    let r = segmenter.segment(reference);
    let h = segmenter.segment(hypothesis);
    edit_counts(&r, &h)
}

/// Micro-averaged corpus metrics: summed edit counts over summed
/// reference lengths.
#[derive(Debug, Clone, Copy, Default)]
pub struct CorpusScore {
    pub wer: f64,
    pub cer: f64,
    pub word_counts: EditCounts,
    pub char_counts: EditCounts,
}

/// Scores a corpus of (reference, hypothesis) pairs.
///
/// Errors when the list is empty or every reference is empty (no N or C
/// to divide by).
pub fn corpus_score(pairs: &[(String, String)], segmenter: &dyn Segmenter) -> Result<CorpusScore> {
    if pairs.is_empty() {
        return Err(Error::InvalidArgument("empty corpus".into()));
    }
    let mut word_counts = EditCounts::default();
    let mut char_counts = EditCounts::default();
    for (reference, hypothesis) in pairs {
        word_counts.accumulate(&word_edit_counts(reference, hypothesis, segmenter));
        char_counts.accumulate(&char_edit_counts(reference, hypothesis));
    }
    if char_counts.ref_len == 0 || word_counts.ref_len == 0 {
        return Err(Error::EmptyReference);
    }
    Ok(CorpusScore {
        wer: word_counts.rate(),
        cer: char_counts.rate(),
        word_counts,
        char_counts,
    })
}
