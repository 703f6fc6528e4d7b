use crate::rational::Rational;
use crate::universe::{Event, Universe};

/// Named events plus the table values that make a property fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub events: Vec<(&'static str, Event)>,
    /// `(label, value)` pairs such as `("g(A∪E)", 13/20)`.
    pub values: Vec<(String, Rational)>,
}

impl Witness {
    pub fn event(&self, role: &str) -> Option<Event> {
        self.events.iter().find(|(r, _)| *r == role).map(|(_, e)| *e)
    }

    /// `A={a} B={b}` with atoms named by the universe.
    pub fn render_events(&self, universe: &Universe) -> String {
        self.events
            .iter()
            .map(|(role, e)| format!("{role}={}", universe.format_event(*e)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}
