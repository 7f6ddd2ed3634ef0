// Typed client for the knowledge-base HTTP API. The portal talks to
// the backend exclusively through these calls.

export interface FacetSummary {
  label: string;
  value: string;
  frequency: number;
}

export interface AssertionSummary {
  id: string;
  subject: string;
  predicate: string;
  object: string;
  frequency: number;
  facets: FacetSummary[];
  has_facets: boolean;
}

export interface Span {
  start: number;
  end: number;
  text: string;
}

export interface ProvenanceRow {
  doc_id: string;
  url: string;
  sent_id: string;
  sentence: string;
  spans: {
    subject?: Span;
    predicate?: Span;
    object?: Span;
    facets: (Span | null)[];
  };
}

export interface ClusterMember {
  s: string;
  p: string;
  o: string;
  frequency: number;
}

export interface AssertionDetail extends AssertionSummary {
  cluster_members: ClusterMember[];
  provenance: ProvenanceRow[];
}

export interface Subgroup {
  name: string;
  member_phrases: string[];
  frequency: number;
}

export interface Aspect {
  name: string;
  frequency: number;
  source: string;
}

export interface ConceptStats {
  websites_retained: number;
  sentences: number;
  raw_assertions: number;
  consolidated_assertions: number;
  summary: string;
}

export interface ConceptPage {
  name: string;
  wordnet_synset_id: string;
  wikipedia_title: string;
  image_url: string;
  alternative_lemmas: string[];
  hypernym_id: string;
  queries: string[];
  subgroups: Subgroup[];
  aspects: Aspect[];
  stats: ConceptStats;
  assertions: AssertionSummary[];
}

export interface QAAnswer {
  text: string;
  confidence?: number;
}

export interface QAResultRow {
  source: string;
  context: string;
  answers: QAAnswer[];
  span?: [number, number];
  error?: string;
}

export interface QAResult {
  rows: QAResultRow[];
}

export interface ApiError {
  status: number;
  code: string;
  message: string;
}

export type QASourceInput = string | { custom: string };

export interface QARequestBody {
  setup: string;
  question: string;
  sources: QASourceInput[];
  answer_prefix?: string;
  k?: number;
  retrieval_method?: string;
  num_answers?: number;
}

export class ApiFailure extends Error {
  constructor(public readonly body: ApiError) {
    super(body.message);
  }
}

const BASE = "";

async function getJson<T>(path: string): Promise<T> {
  const response = await fetch(BASE + path);
  const body = await response.json();
  if (!response.ok) {
    throw new ApiFailure(body as ApiError);
  }
  return body as T;
}

export function fetchConcept(name: string): Promise<ConceptPage> {
  return getJson(`/api/concepts/${encodeURIComponent(name)}`);
}

export function fetchAssertion(id: string): Promise<AssertionDetail> {
  return getJson(`/api/assertions/${encodeURIComponent(id)}`);
}

export function searchAssertions(
  s: string, p: string, o: string,
): Promise<{ results: AssertionSummary[] }> {
  const params = new URLSearchParams({ s, p, o });
  return getJson(`/api/search?${params}`);
}

export function autocomplete(q: string): Promise<{ names: string[] }> {
  const params = new URLSearchParams({ q });
  return getJson(`/api/autocomplete?${params}`);
}

export async function postQA(body: QARequestBody): Promise<QAResult> {
  const response = await fetch(`${BASE}/api/qa`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  const payload = await response.json();
  if (!response.ok) {
    throw new ApiFailure(payload as ApiError);
  }
  return payload as QAResult;
}
