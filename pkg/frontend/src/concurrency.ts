/** Last-write-wins request gate: starting a new run aborts the previous one,
 * and results from superseded runs are dropped instead of rendered. */

export class LatestGate {
  private seq = 0;
  private controller: AbortController | null = null;

  async run<T>(task: (signal: AbortSignal) => Promise<T>): Promise<T | undefined> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    const ticket = ++this.seq;
    try {
      const result = await task(controller.signal);
      return ticket === this.seq ? result : undefined;
    } catch (err) {
      if (ticket !== this.seq || controller.signal.aborted) return undefined;
      throw err;
    }
  }
}
