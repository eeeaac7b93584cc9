use super::ast::Span;
use super::diagnostic::Diagnostic;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    Int(u64),
    /// `m:name`
    Micro(String),
    /// `M:name`
    Macro(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    /// `(-)` or `⊖`
    Diff,
    /// `~` or `≡`
    Tilde,
    /// `=`
    Assign,
    /// `∈`; the keyword `in` arrives as an identifier
    Member,
    /// `∅`
    EmptySet,
    Lt,
    Le,
    EqEq,
    Ne,
    Ge,
    Gt,
}

impl Token {
    pub fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("`{s}`"),
            Token::Int(n) => format!("`{n}`"),
            Token::Micro(s) => format!("`m:{s}`"),
            Token::Macro(s) => format!("`M:{s}`"),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::LBracket => "`[`".into(),
            Token::RBracket => "`]`".into(),
            Token::Comma => "`,`".into(),
            Token::Diff => "`(-)`".into(),
            Token::Tilde => "`~`".into(),
            Token::Assign => "`=`".into(),
            Token::Member => "`in`".into(),
            Token::EmptySet => "`[]`".into(),
            Token::Lt => "`<`".into(),
            Token::Le => "`<=`".into(),
            Token::EqEq => "`==`".into(),
            Token::Ne => "`!=`".into(),
            Token::Ge => "`>=`".into(),
            Token::Gt => "`>`".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned {
    pub token: Token,
    pub span: Span,
}

/// Splits one line of source into tokens. Columns count characters, not
/// bytes.
pub fn tokenize(text: &str, line: usize) -> Result<Vec<Spanned>, Diagnostic> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let span = Span::new(line, i + 1);
        let peek = |k: usize| chars.get(i + k).copied();
        let (token, len) = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' if peek(1) == Some('-') && peek(2) == Some(')') => (Token::Diff, 3),
            '(' => (Token::LParen, 1),
            ')' => (Token::RParen, 1),
            '[' => (Token::LBracket, 1),
            ']' => (Token::RBracket, 1),
            ',' => (Token::Comma, 1),
            '~' | '≡' => (Token::Tilde, 1),
            '⊖' => (Token::Diff, 1),
            '∈' => (Token::Member, 1),
            '∅' => (Token::EmptySet, 1),
            '=' if peek(1) == Some('=') => (Token::EqEq, 2),
            '=' => (Token::Assign, 1),
            '!' if peek(1) == Some('=') => (Token::Ne, 2),
            '<' if peek(1) == Some('=') => (Token::Le, 2),
            '<' => (Token::Lt, 1),
            '>' if peek(1) == Some('=') => (Token::Ge, 2),
            '>' => (Token::Gt, 1),
            c if c.is_ascii_digit() => {
                let len = chars[i..].iter().take_while(|c| c.is_ascii_digit()).count();
                let digits: String = chars[i..i + len].iter().collect();
                let n = digits.parse().map_err(|_| {
                    Diagnostic::parse(format!("integer `{digits}` is too large"), span)
                })?;
                (Token::Int(n), len)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let len = ident_len(&chars[i..]);
                let word: String = chars[i..i + len].iter().collect();
                if (word == "m" || word == "M") && peek(len) == Some(':') {
                    let rest = &chars[i + len + 1..];
                    let name_len = ident_len(rest);
                    if name_len == 0 || rest[0].is_ascii_digit() {
                        return Err(Diagnostic::parse(
                            format!("expected a name after `{word}:`"),
                            Span::new(line, i + len + 2),
                        ));
                    }
                    let name: String = rest[..name_len].iter().collect();
                    let token = if word == "m" {
                        Token::Micro(name)
                    } else {
                        Token::Macro(name)
                    };
                    (token, len + 1 + name_len)
                } else {
                    (Token::Ident(word), len)
                }
            }
            other => {
                return Err(Diagnostic::parse(
                    format!("unexpected character `{other}`"),
                    span,
                ))
            }
        };
        out.push(Spanned { token, span });
        i += len;
    }
    Ok(out)
}

fn ident_len(chars: &[char]) -> usize {
    chars
        .iter()
        .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
        .count()
}
