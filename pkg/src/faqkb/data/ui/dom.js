/** Small DOM construction helper; no framework, just elements. */
export function el(tag, attrs = {}, ...children) {
    const node = document.createElement(tag);
    for (const [key, value] of Object.entries(attrs)) {
        if (typeof value === "function") {
            node.addEventListener(key.replace(/^on/, ""), value);
        }
        else if (key === "value" && "value" in node) {
            node.value = value;
        }
        else {
            node.setAttribute(key, value);
        }
    }
    for (const child of children) {
        if (child === null || child === undefined)
            continue;
        node.append(child);
    }
    return node;
}
export function clear(node) {
    while (node.firstChild) {
        node.removeChild(node.firstChild);
    }
}
