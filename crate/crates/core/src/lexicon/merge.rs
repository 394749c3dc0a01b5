use std::collections::{BTreeSet, HashMap};

use super::{ContextSlots, Reading, Source, SubcatFrame};

type MergeKey = (String, BTreeSet<SubcatFrame>, bool, ContextSlots, Option<ContextSlots>);

pub(crate) fn merge_key(r: &Reading) -> MergeKey {
    (r.lemma.clone(), r.subcat.clone(), r.sip, r.slots, r.cogniser_slots)
}

/// Collapses readings that agree on lemma, subcategorisation, SIP flag and
/// every slot. A merged entry has source `MERGED`, a `+`-joined list of the
/// original reading ids, and the union of their event kinds. Output is
/// sorted by lemma then reading id, whatever the input order.
pub fn merge_duplicates(entries: Vec<Reading>) -> Vec<Reading> {
    let mut sorted = entries;
    sorted.sort_by_cached_key(sort_key);

    // Key positions in a side table; ContextSlots is Hash but not Ord.
    let mut groups: Vec<(MergeKey, Vec<Reading>)> = Vec::new();
    let mut position: HashMap<MergeKey, usize> = HashMap::new();
    for r in sorted {
        let key = merge_key(&r);
        match position.get(&key) {
            Some(&i) => groups[i].1.push(r),
            None => {
                position.insert(key.clone(), groups.len());
                groups.push((key, vec![r]));
            }
        }
    }

    let mut out: Vec<Reading> = groups
        .into_iter()
        .map(|(_, members)| combine(members))
        .collect();
    out.sort_by_cached_key(sort_key);
    out
}

type SortKey = (String, String, Source, String, String, String, bool, Vec<SubcatFrame>);

fn sort_key(r: &Reading) -> SortKey {
    (
        r.lemma.clone(),
        r.reading_id.clone(),
        r.source,
        r.gloss.clone(),
        r.slots.to_string(),
        r.cogniser_slots.map(|c| c.to_string()).unwrap_or_default(),
        r.sip,
        r.subcat.iter().copied().collect(),
    )
}

fn combine(mut members: Vec<Reading>) -> Reading {
    if members.len() == 1 {
        return members.pop().unwrap();
    }
    let ids: BTreeSet<&str> = members
        .iter()
        .flat_map(|r| r.reading_id.split('+'))
        .collect();
    let reading_id = ids.into_iter().collect::<Vec<_>>().join("+");
    let gloss = members
        .iter()
        .map(|r| r.gloss.as_str())
        .find(|g| !g.is_empty())
        .unwrap_or("")
        .to_string();
    let event_kinds: BTreeSet<_> = members
        .iter()
        .flat_map(|r| r.event_kinds.iter().copied())
        .collect();
    let first = &members[0];
    Reading {
        lemma: first.lemma.clone(),
        reading_id,
        source: Source::Merged,
        gloss,
        sip: first.sip,
        subcat: first.subcat.clone(),
        slots: first.slots,
        cogniser_slots: first.cogniser_slots,
        event_kinds,
    }
}
