//! Shared value vocabulary: polarity, certainty degrees, factuality values,
//! graded inference values and the signatures built from them.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Positive,
    Negative,
    Unknown,
}

impl Polarity {
    pub const ALL: [Polarity; 3] = [Polarity::Positive, Polarity::Negative, Polarity::Unknown];

    pub fn symbol(self) -> &'static str {
        match self {
            Polarity::Positive => "+",
            Polarity::Negative => "-",
            Polarity::Unknown => "u",
        }
    }

    /// Sign product; any unknown factor makes the result unknown.
    pub fn combine(self, other: Polarity) -> Polarity {
        use Polarity::*;
        match (self, other) {
            (Unknown, _) | (_, Unknown) => Unknown,
            (a, b) if a == b => Positive,
            _ => Negative,
        }
    }

    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
            Polarity::Unknown => Polarity::Unknown,
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Certainty degree, ordered `U < PS < PR < CT`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CertaintyDegree {
    U,
    PS,
    PR,
    CT,
}

impl CertaintyDegree {
    /// Strongest first, the column order of a factuality grid.
    pub const ALL: [CertaintyDegree; 4] = [
        CertaintyDegree::CT,
        CertaintyDegree::PR,
        CertaintyDegree::PS,
        CertaintyDegree::U,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CertaintyDegree::CT => "CT",
            CertaintyDegree::PR => "PR",
            CertaintyDegree::PS => "PS",
            CertaintyDegree::U => "U",
        }
    }
}

impl fmt::Display for CertaintyDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CertaintyDegree {
    type Err = FactualityValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "CT" => Ok(CertaintyDegree::CT),
            "PR" => Ok(CertaintyDegree::PR),
            "PS" => Ok(CertaintyDegree::PS),
            "U" => Ok(CertaintyDegree::U),
            _ => Err(FactualityValueError::Malformed(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactualityValueError {
    #[error("U degree only combines with unknown polarity, got U{0}")]
    CommittedUnknown(Polarity),
    #[error("malformed factuality value {0:?}")]
    Malformed(String),
}

/// A FactBank factuality value. Only ten combinations exist:
/// `{CT,PR,PS} x {+,-,u}` plus `Uu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactualityValue {
    degree: CertaintyDegree,
    polarity: Polarity,
}

impl FactualityValue {
    pub const UU: FactualityValue = FactualityValue {
        degree: CertaintyDegree::U,
        polarity: Polarity::Unknown,
    };
    pub const CT_POS: FactualityValue = FactualityValue {
        degree: CertaintyDegree::CT,
        polarity: Polarity::Positive,
    };

    pub fn new(
        degree: CertaintyDegree,
        polarity: Polarity,
    ) -> Result<FactualityValue, FactualityValueError> {
        if degree == CertaintyDegree::U && polarity != Polarity::Unknown {
            return Err(FactualityValueError::CommittedUnknown(polarity));
        }
        Ok(FactualityValue { degree, polarity })
    }

    /// Like [`FactualityValue::new`] but collapses any U-degree value to `Uu`.
    pub fn saturating(degree: CertaintyDegree, polarity: Polarity) -> FactualityValue {
        if degree == CertaintyDegree::U {
            FactualityValue::UU
        } else {
            FactualityValue { degree, polarity }
        }
    }

    pub fn degree(self) -> CertaintyDegree {
        self.degree
    }

    pub fn polarity(self) -> Polarity {
        self.polarity
    }

    /// All ten licit values.
    pub fn all() -> Vec<FactualityValue> {
        let mut out = Vec::with_capacity(10);
        for degree in CertaintyDegree::ALL {
            for polarity in Polarity::ALL {
                if let Ok(v) = FactualityValue::new(degree, polarity) {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Polarity product and degree minimum.
    pub fn combine(self, other: FactualityValue) -> FactualityValue {
        FactualityValue::saturating(
            self.degree.min(other.degree),
            self.polarity.combine(other.polarity),
        )
    }
}

impl fmt::Display for FactualityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.degree, self.polarity)
    }
}

impl FromStr for FactualityValue {
    type Err = FactualityValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || FactualityValueError::Malformed(s.to_string());
        let last = s.chars().last().ok_or_else(malformed)?;
        let polarity = match last {
            '+' => Polarity::Positive,
            '-' | '\u{2212}' => Polarity::Negative,
            'u' => Polarity::Unknown,
            _ => return Err(malformed()),
        };
        let degree: CertaintyDegree = s[..s.len() - last.len_utf8()]
            .parse()
            .map_err(|_| malformed())?;
        FactualityValue::new(degree, polarity)
    }
}

/// A graded inference: neutral (`n`) or a signed magnitude on the
/// annotation scale `{0.6, 0.7, 0.8, 0.9, 1}`.
///
/// Magnitudes are stored in tenths so that comparisons are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InferenceValue {
    Neutral,
    Graded(i8),
}

impl InferenceValue {
    /// The 11 values of the scale: `n`, then `±1 ... ±0.6`.
    pub const SCALE: [InferenceValue; 11] = [
        InferenceValue::Neutral,
        InferenceValue::Graded(10),
        InferenceValue::Graded(-10),
        InferenceValue::Graded(9),
        InferenceValue::Graded(-9),
        InferenceValue::Graded(8),
        InferenceValue::Graded(-8),
        InferenceValue::Graded(7),
        InferenceValue::Graded(-7),
        InferenceValue::Graded(6),
        InferenceValue::Graded(-6),
    ];

    pub const ONE: InferenceValue = InferenceValue::Graded(10);
    pub const MINUS_ONE: InferenceValue = InferenceValue::Graded(-10);

    /// Builds a value from signed tenths; `None` when off the scale.
    pub fn from_tenths(tenths: i8) -> Option<InferenceValue> {
        match tenths.unsigned_abs() {
            6..=10 => Some(InferenceValue::Graded(tenths)),
            _ => None,
        }
    }

    /// Magnitude in tenths; neutral counts as 0.
    pub fn magnitude(self) -> u8 {
        match self {
            InferenceValue::Neutral => 0,
            InferenceValue::Graded(t) => t.unsigned_abs(),
        }
    }

    pub fn is_neutral(self) -> bool {
        matches!(self, InferenceValue::Neutral)
    }

    pub fn is_max(self) -> bool {
        self.magnitude() == 10
    }

    /// Polarity of the inferred event: `+` for occurrence, `-` for
    /// non-occurrence, `u` for neutral.
    pub fn sign(self) -> Polarity {
        match self {
            InferenceValue::Neutral => Polarity::Unknown,
            InferenceValue::Graded(t) if t > 0 => Polarity::Positive,
            InferenceValue::Graded(_) => Polarity::Negative,
        }
    }
}

impl fmt::Display for InferenceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            InferenceValue::Neutral => f.write_str("n"),
            InferenceValue::Graded(10) => f.write_str("1"),
            InferenceValue::Graded(-10) => f.write_str("-1"),
            InferenceValue::Graded(t) => {
                let sign = if t < 0 { "-" } else { "" };
                write!(f, "{}0.{}", sign, t.unsigned_abs())
            }
        }
    }
}

/// Why a signature token was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignatureErrorKind {
    Empty,
    MissingSeparator,
    Malformed,
    OffScale,
}

impl fmt::Display for SignatureErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignatureErrorKind::Empty => "empty signature",
            SignatureErrorKind::MissingSeparator => "expected `<pos>|<neg>`",
            SignatureErrorKind::Malformed => "malformed inference value",
            SignatureErrorKind::OffScale => "magnitude off scale",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind}: {token:?} at position {position}")]
pub struct ParseSignatureError {
    pub kind: SignatureErrorKind,
    pub token: String,
    /// Character offset of the token in the (trimmed) input.
    pub position: usize,
}

fn parse_inference(token: &str, position: usize) -> Result<InferenceValue, ParseSignatureError> {
    let err = |kind| ParseSignatureError {
        kind,
        token: token.to_string(),
        position,
    };
    if token == "n" {
        return Ok(InferenceValue::Neutral);
    }
    let (negative, body) = match token.chars().next() {
        Some('-') | Some('\u{2212}') => (true, &token[token.chars().next().unwrap().len_utf8()..]),
        Some('+') => (false, &token[1..]),
        _ => (false, token),
    };
    if body.is_empty() {
        return Err(err(SignatureErrorKind::Malformed));
    }
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (body, None),
    };
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !frac_part.is_none_or(|f| !f.is_empty() && all_digits(f)) {
        return Err(err(SignatureErrorKind::Malformed));
    }
    // Scale has one decimal place; anything finer is off scale.
    let int_value: u32 = if int_part.is_empty() {
        0
    } else {
        int_part.parse().map_err(|_| err(SignatureErrorKind::OffScale))?
    };
    let frac = frac_part.unwrap_or("").trim_end_matches('0');
    if frac.len() > 1 {
        return Err(err(SignatureErrorKind::OffScale));
    }
    let tenths = int_value
        .checked_mul(10)
        .and_then(|v| v.checked_add(frac.parse::<u32>().unwrap_or(0)))
        .ok_or_else(|| err(SignatureErrorKind::OffScale))?;
    if !(6..=10).contains(&tenths) {
        return Err(err(SignatureErrorKind::OffScale));
    }
    let tenths = tenths as i8;
    Ok(InferenceValue::Graded(if negative { -tenths } else { tenths }))
}

/// An inferential signature `pos|neg`: the inference triggered about the
/// embedded event under positive and under negative polarity of the verb.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub pos: InferenceValue,
    pub neg: InferenceValue,
}

impl Signature {
    pub const NEUTRAL: Signature = Signature {
        pos: InferenceValue::Neutral,
        neg: InferenceValue::Neutral,
    };

    pub fn new(pos: InferenceValue, neg: InferenceValue) -> Signature {
        Signature { pos, neg }
    }

    /// Exchanges the two polarity components.
    pub fn swap(self) -> Signature {
        Signature {
            pos: self.neg,
            neg: self.pos,
        }
    }

    /// Component magnitudes `(|pos|, |neg|)` in tenths.
    pub fn magnitudes(self) -> (u8, u8) {
        (self.pos.magnitude(), self.neg.magnitude())
    }

    /// All 121 signatures over the annotation scale.
    pub fn all() -> impl Iterator<Item = Signature> {
        InferenceValue::SCALE.into_iter().flat_map(|pos| {
            InferenceValue::SCALE
                .into_iter()
                .map(move |neg| Signature { pos, neg })
        })
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.pos, self.neg)
    }
}

impl FromStr for Signature {
    type Err = ParseSignatureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match parse_signature(s)? {
            SignatureSlot::Sig(sig) => Ok(sig),
            marker => Err(ParseSignatureError {
                kind: SignatureErrorKind::Malformed,
                token: marker.to_string(),
                position: 0,
            }),
        }
    }
}

/// One annotation cell: a signature, or one of the two unannotated markers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignatureSlot {
    Sig(Signature),
    /// Test not applicable for the reading (e.g. it requires an animate subject).
    NotApplicable,
    /// The test sentence is ungrammatical.
    Ungrammatical,
}

impl SignatureSlot {
    pub fn signature(self) -> Option<Signature> {
        match self {
            SignatureSlot::Sig(sig) => Some(sig),
            _ => None,
        }
    }

    pub fn is_annotated(self) -> bool {
        matches!(self, SignatureSlot::Sig(_))
    }
}

impl From<Signature> for SignatureSlot {
    fn from(sig: Signature) -> Self {
        SignatureSlot::Sig(sig)
    }
}

impl fmt::Display for SignatureSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignatureSlot::Sig(sig) => sig.fmt(f),
            SignatureSlot::NotApplicable => f.write_str("NA"),
            SignatureSlot::Ungrammatical => f.write_str("UNGR"),
        }
    }
}

impl FromStr for SignatureSlot {
    type Err = ParseSignatureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_signature(s)
    }
}

/// Parses `NA`, `UNGR` or `<v>|<v>` with `v` in `{n, ±1, ±0.9 ... ±0.6}`.
/// Surrounding whitespace is ignored; `.9` is accepted for `0.9`.
pub fn parse_signature(text: &str) -> Result<SignatureSlot, ParseSignatureError> {
    let leading = text.chars().take_while(|c| c.is_whitespace()).count();
    let trimmed = text.trim();
    match trimmed {
        "" => {
            return Err(ParseSignatureError {
                kind: SignatureErrorKind::Empty,
                token: String::new(),
                position: 0,
            })
        }
        "NA" => return Ok(SignatureSlot::NotApplicable),
        "UNGR" => return Ok(SignatureSlot::Ungrammatical),
        _ => {}
    }
    let Some((pos_text, neg_text)) = trimmed.split_once('|') else {
        return Err(ParseSignatureError {
            kind: SignatureErrorKind::MissingSeparator,
            token: trimmed.to_string(),
            position: leading,
        });
    };
    let neg_offset = leading + pos_text.chars().count() + 1;
    let pos = parse_inference(pos_text.trim(), leading)?;
    let neg = parse_inference(neg_text.trim(), neg_offset)?;
    Ok(SignatureSlot::Sig(Signature { pos, neg }))
}

pub fn format_signature(slot: SignatureSlot) -> String {
    slot.to_string()
}

/// Annotation context: outer aspect, plus subject animacy under perfective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContextKey {
    PfvAnim,
    PfvInanim,
    Imp,
}

impl ContextKey {
    pub const ALL: [ContextKey; 3] = [ContextKey::PfvAnim, ContextKey::PfvInanim, ContextKey::Imp];

    pub fn as_str(self) -> &'static str {
        match self {
            ContextKey::PfvAnim => "PFV_ANIM",
            ContextKey::PfvInanim => "PFV_INANIM",
            ContextKey::Imp => "IMP",
        }
    }
}

impl fmt::Display for ContextKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InferentialClass {
    TwoWayImplicative,
    OneWayPlusImplicative,
    OneWayMinusImplicative,
    Factive,
    CounterFactive,
    TwoWayQuasiImplicative,
    OneWayQuasiImplicative,
    Neutral,
}

impl InferentialClass {
    pub const ALL: [InferentialClass; 8] = [
        InferentialClass::TwoWayImplicative,
        InferentialClass::OneWayPlusImplicative,
        InferentialClass::OneWayMinusImplicative,
        InferentialClass::Factive,
        InferentialClass::CounterFactive,
        InferentialClass::TwoWayQuasiImplicative,
        InferentialClass::OneWayQuasiImplicative,
        InferentialClass::Neutral,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InferentialClass::TwoWayImplicative => "two_way_implicative",
            InferentialClass::OneWayPlusImplicative => "one_way_plus_implicative",
            InferentialClass::OneWayMinusImplicative => "one_way_minus_implicative",
            InferentialClass::Factive => "factive",
            InferentialClass::CounterFactive => "counter_factive",
            InferentialClass::TwoWayQuasiImplicative => "two_way_quasi_implicative",
            InferentialClass::OneWayQuasiImplicative => "one_way_quasi_implicative",
            InferentialClass::Neutral => "neutral",
        }
    }
}

impl fmt::Display for InferentialClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InferentialClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InferentialClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown inferential class {s:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sig(pos: InferenceValue, neg: InferenceValue) -> SignatureSlot {
        SignatureSlot::Sig(Signature::new(pos, neg))
    }

    #[test]
    fn parses_paper_notation() {
        assert_eq!(
            parse_signature("1|-1").unwrap(),
            sig(InferenceValue::ONE, InferenceValue::MINUS_ONE)
        );
        assert_eq!(parse_signature("n|n").unwrap(), SignatureSlot::Sig(Signature::NEUTRAL));
        assert_eq!(parse_signature(" NA ").unwrap(), SignatureSlot::NotApplicable);
        assert_eq!(parse_signature("UNGR").unwrap(), SignatureSlot::Ungrammatical);
        assert_eq!(
            parse_signature(".9|n").unwrap(),
            sig(InferenceValue::Graded(9), InferenceValue::Neutral)
        );
        assert_eq!(
            parse_signature("-.7|-1").unwrap(),
            sig(InferenceValue::Graded(-7), InferenceValue::MINUS_ONE)
        );
    }

    #[test]
    fn rejects_off_scale_values() {
        let err = parse_signature("0.5|n").unwrap_err();
        assert_eq!(err.kind, SignatureErrorKind::OffScale);
        assert_eq!(err.token, "0.5");
        assert_eq!(err.position, 0);

        let err = parse_signature("n|0.95").unwrap_err();
        assert_eq!(err.kind, SignatureErrorKind::OffScale);
        assert_eq!(err.token, "0.95");
        assert_eq!(err.position, 2);

        assert_eq!(parse_signature("2|n").unwrap_err().kind, SignatureErrorKind::OffScale);
        assert_eq!(parse_signature("0|n").unwrap_err().kind, SignatureErrorKind::OffScale);
    }

    #[test]
    fn rejects_malformed_text() {
        assert_eq!(parse_signature("").unwrap_err().kind, SignatureErrorKind::Empty);
        assert_eq!(parse_signature("1").unwrap_err().kind, SignatureErrorKind::MissingSeparator);
        assert_eq!(parse_signature("x|n").unwrap_err().kind, SignatureErrorKind::Malformed);
        assert_eq!(parse_signature("1|").unwrap_err().kind, SignatureErrorKind::Malformed);
        assert_eq!(parse_signature("1|n|n").unwrap_err().kind, SignatureErrorKind::Malformed);
        assert_eq!(parse_signature("1.|n").unwrap_err().kind, SignatureErrorKind::Malformed);
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(format_signature(sig(InferenceValue::Graded(9), InferenceValue::Neutral)), "0.9|n");
        assert_eq!(format_signature(SignatureSlot::NotApplicable), "NA");
        assert_eq!(format_signature(SignatureSlot::Ungrammatical), "UNGR");
        assert_eq!(
            format_signature(sig(InferenceValue::Graded(-7), InferenceValue::MINUS_ONE)),
            "-0.7|-1"
        );
        assert_eq!(parse_signature("1.0|+0.90").unwrap().to_string(), "1|0.9");
    }

    #[test]
    fn exhaustive_round_trip() {
        let mut slots: Vec<SignatureSlot> = Signature::all().map(SignatureSlot::Sig).collect();
        assert_eq!(slots.len(), 121);
        slots.push(SignatureSlot::NotApplicable);
        slots.push(SignatureSlot::Ungrammatical);
        for slot in slots {
            assert_eq!(parse_signature(&format_signature(slot)).unwrap(), slot);
        }
    }

    #[test]
    fn factuality_space_has_ten_values() {
        let all = FactualityValue::all();
        assert_eq!(all.len(), 10);
        for v in &all {
            assert_eq!(v.to_string().parse::<FactualityValue>().unwrap(), *v);
        }
        assert!(FactualityValue::new(CertaintyDegree::U, Polarity::Positive).is_err());
        assert!(FactualityValue::new(CertaintyDegree::U, Polarity::Negative).is_err());
        assert!("U+".parse::<FactualityValue>().is_err());
        assert!("XX+".parse::<FactualityValue>().is_err());
        assert_eq!("PR-".parse::<FactualityValue>().unwrap().to_string(), "PR-");
    }

    #[test]
    fn degree_order() {
        use CertaintyDegree::*;
        assert!(CT > PR && PR > PS && PS > U);
    }

    #[test]
    fn polarity_product() {
        use Polarity::*;
        assert_eq!(Negative.combine(Negative), Positive);
        assert_eq!(Negative.combine(Positive), Negative);
        assert_eq!(Unknown.combine(Negative), Unknown);
    }

    proptest! {
        #[test]
        fn arbitrary_text_never_panics(s in "\\PC{0,12}") {
            let _ = parse_signature(&s);
        }

        #[test]
        fn parsed_values_reformat_canonically(s in "[-+]?(0?\\.[0-9]|1(\\.0)?)\\|(n|-?0\\.[6-9])") {
            if let Ok(slot) = parse_signature(&s) {
                let canonical = format_signature(slot);
                prop_assert_eq!(parse_signature(&canonical).unwrap(), slot);
            }
        }
    }
}
