// Generated by tools/genShapes.mjs; do not edit by hand.
// Pre-projected Albers composite geometry on a 975x610 viewport.

export interface StateShape {
  name: string;
  path: string;
  bounds: [number, number, number, number]; // minX, minY, maxX, maxY
}

export const MAP_WIDTH = 975;
export const MAP_HEIGHT = 610;

export const STATE_SHAPES: Record<string, StateShape> = {
  "01": { name: "Alabama", bounds: [641.5, 379.7, 710.8, 492.6], path: "M648,492.4L651.8,491.5L651.9,491L652.9,491.8L652.3,492.3L651.6,492.1L649,492.6L648,492.4ZM641.6,384L641.5,383.7L655.9,382.6L666.5,381.9L685.2,380L689.2,379.7L689.9,382.4L693.3,394L702.5,427L703.1,427.4L702.9,428.1L703.9,428.9L704.5,431.8L705.3,433.1L706.7,434.3L707.1,435.9L707.8,436.5L707.3,438.8L708.7,439.2L709.6,439.9L708.9,441L707.5,442.1L706.7,443.2L707.1,444.3L707.1,446L706.9,447.7L705.9,450.1L706.6,452.5L706.6,453.3L708.1,454.9L708.6,457.1L708.2,458.3L708.4,459.2L708.1,460.8L708.3,462.3L707.9,462.8L708.3,464.8L709.9,466.4L710.8,468.8L693.6,470.8L681.5,472.1L669.5,473.1L660.7,474L661,474.7L660.3,477L662,478.7L662.5,479.6L665.1,480.9L665.4,481.9L664.6,484.7L665.4,485.9L666.3,486.4L665.2,487L664.9,488.5L664.1,489.2L664.7,489.5L663.7,490.1L661.1,491L657.6,491.8L655.2,492L655.6,491.2L656.5,491.6L658.9,490.9L659.1,490.2L657.2,488.4L655.9,487.8L655.2,486.1L655.7,484.9L655.4,483.1L654.8,482.2L653.4,481.7L652.4,482.7L652.6,483.4L651.9,485.8L652.1,488.9L651.6,490.2L650.5,490.4L650.5,489.6L649.1,489L648,489.4L647.7,489L646.5,489.5L645.1,478.3L642.7,459.5L642.2,455L642.5,443.9L643,413.2L643.4,396.1L643.7,386.2L642.6,385.6L641.6,384Z" },
  "02": { name: "Alaska", bounds: [-57.6, 465, 202.9, 604.1], path: "M104.2,551.6L104.6,550.3L105.1,550.5L104.2,551.6ZM99.1,569.9L99.5,569.3L100.1,569.7L100.1,568.7L101.8,567.4L102.4,566.6L102.2,565.9L103.4,565.2L102.9,567.5L103.5,567L104.4,567.9L105,567.5L104.7,569.1L103.7,568.6L103.9,569.2L102.5,568.9L102.3,569.9L100.9,570.5L99.1,569.9ZM95.1,582L96.3,581.4L96.9,582.3L95.7,582.4L95.1,582ZM93.3,575.4L94,574.3L95.7,573.1L96.7,573.2L97.1,574.4L97.3,573.2L96.9,571.9L97.8,571.3L98.5,571.7L99.5,571.6L99,570.7L100.5,571.5L99.7,570.7L101.4,570.9L101.3,571.6L102.1,571.5L103.1,570.6L103.9,572.3L103.2,572.1L103.2,573.5L104.5,573.3L103.8,574.9L102,574.3L102.6,575.3L101.7,576.2L100.2,576.9L101.5,577.1L100,577.7L99.7,578.4L99.2,577.7L99.5,576.8L98,579.4L97.1,580.2L96,580.4L97.3,578.8L96.8,578.7L97.5,577.1L95.4,579.6L94.4,578.4L94.4,576.9L93.3,576.1L93.3,575.4ZM93.1,582.8L94.3,581.5L95,581.9L93.4,583.1L93.1,582.8ZM88.9,587.6L89.6,586.9L89.6,588.1L88.9,587.6ZM71.8,593.7L71.9,592.8L72.4,593.5L71.8,593.7ZM71,591.7L71.7,591.2L71.6,592.9L71,592.8L71,591.7ZM68.2,593.5L69,592.6L68.6,592L69.2,591.4L70.3,591.7L70,592.3L68.2,593.5ZM65.8,590.1L66.5,589.5L68.2,590.1L68,590.9L67.2,590.1L67.1,591.8L66.4,591.1L65.9,591.6L65.8,590.1ZM67.5,564.2L67.7,563.3L69.3,562.5L68.3,564.3L67.5,564.2ZM60.9,591.2L61.3,590.8L62.3,591.5L61.5,591.8L60.9,591.2ZM58.3,592.4L59.2,592.2L58.7,593.3L58.3,592.4ZM66.1,523.9L67.3,523.7L67.3,524.3L66.1,523.9ZM56,595.9L56,595.6L58.1,596.7L57.5,597L56,595.9ZM44.6,597L45.9,596.9L45.8,597.4L44.6,597ZM42.7,595.5L43,595.1L43.9,596L43.1,596.7L42.7,595.5ZM40.6,595.9L41.8,595.6L42.5,596.7L40.7,596.8L40.6,595.9ZM44.2,547.5L46.2,547.9L47.2,547.1L48.5,547.1L49.5,546.7L49.6,547.6L50.4,547.6L50.9,548.5L51,551.2L49.2,551.3L48.4,552L47.7,551.1L46.8,550.9L44.4,548.7L44.2,547.5ZM31.3,600.8L33.3,600.2L33.8,600.4L35.9,598.5L36.7,599.1L36.9,598.5L35.8,598.1L35.4,597.5L36.1,596.7L37.9,596.5L37.8,597.2L38.5,597.5L39.2,596.8L39.8,597.5L38,598.9L40.1,598.2L40,598.8L39.1,599.4L37.8,599.6L36.6,600.9L34.8,600.6L33.9,601.1L32.2,601.5L31.3,600.8ZM50.7,504.5L52.9,503.7L55.5,502.3L59.1,500.7L61.2,500L63.9,499.5L65.7,499.7L65.7,500.8L64.9,502.8L65.2,503.9L67.2,504.2L68.5,504.1L69.6,504.8L70.5,504.5L71.4,505.1L72.5,503.4L74.3,503.7L73.9,502.8L72.7,502.2L71.4,502.5L71.7,501.2L70.7,499.4L70,499.2L69.7,498.2L70.7,497.6L71.5,499L71.2,500.1L72.6,501.9L73.4,501.7L71.9,499.6L72.3,498.3L73.2,497.6L72.4,497L70.2,497.3L66.5,495.6L66.7,494.6L66.2,492.3L62.9,487.9L61.4,486.9L60.8,485.7L59.4,484.4L60.4,484.2L61,483.3L61.5,480.8L64,481.4L67.2,481.3L69.5,480L70.5,478.8L71.1,476.5L71.7,475L74,472.2L75.3,471.4L76.8,471.8L78.2,471.3L79.9,470.1L81.6,468.4L82.9,467.9L84.2,468.7L86.7,468.1L87.6,467.4L89.3,465.1L90.1,465L92.5,466.1L92.7,466.6L91.4,467.7L91.5,468.6L92.3,468.8L92.7,467.9L93.6,467.2L94,466.3L95,467.2L95.1,468.8L96.2,469.2L97,468.3L98.7,468L101.4,468.7L100.8,469.8L100.9,470.4L102.8,470.8L102.4,471.8L104.4,472.1L104.9,471.5L106.4,471.4L106.5,471.8L108.9,470.8L110.8,471.5L111.3,471.3L112.1,472.2L112.4,471.8L113.9,472.8L115.4,473L116.1,472.7L118.9,472.6L120.3,473.4L121.6,473.8L122.5,473.6L124.4,472.2L126,471.7L131.6,474.3L132.9,474.4L147.3,547.1L149.2,547.3L149.3,546.6L151.4,547.2L152.2,545.7L154.5,545.1L154.6,547.3L155.4,547.9L156.8,548.2L157.4,549.2L162.3,552.4L163.6,554.8L165.6,552.2L166.5,551.9L166.7,550.9L166.3,549.5L167,549.3L166.5,548.3L167.9,547.4L169.4,545.9L171.7,547.2L171.8,548.3L172.6,549.3L173.6,549.2L175.4,550.4L176.3,551.6L178.2,552.1L180.8,553.8L180.5,554.3L182.2,555.7L183,556.7L184.2,557.6L186.3,559.8L188.3,561.5L188.1,562.6L189.5,562.5L189.7,563.9L190.9,564.1L191.6,565.6L192.6,565.1L195.2,565.9L196.6,565.8L198.2,566.2L198.7,566.9L200.1,566.6L200.9,568L200.8,569.3L201.5,570.6L202.9,572.6L202.4,575.9L201.4,577.9L200.7,577.3L200.3,577.8L198.4,575L199.1,573.9L198.5,572.1L197.6,570.6L196.8,570.2L198.1,571.9L198.4,574.2L198.1,575.1L196.9,575.2L195.4,574.7L194.4,573.7L194.6,572.7L194.1,570.7L194.1,572.6L193.6,573.1L193.9,574L192.8,573.7L192.3,572.9L192.5,571.7L192.1,570.1L192.2,568.8L191.6,570.1L192,570.8L191.1,571.8L190.2,570.5L189.2,570.5L188.9,569.7L189.4,568.6L190.2,568.2L189.6,567.2L190.4,567.2L188.5,566.3L188.2,565.4L187.1,565.1L185.7,563.9L183.2,563.5L183.1,562.1L182.3,560.4L181.5,560.3L181.4,559.6L183.6,560L181.6,559L181,559.1L179,557.5L178.4,555.8L178.3,556.5L176.2,556.8L175,555.1L172.8,552.8L171.5,550.3L170.3,549.6L170,550.1L171.4,551.2L171.8,552.4L173.4,554.5L174.7,557.7L173.3,557.4L172.7,556.5L171.8,556.5L170.8,557.2L170.3,555.4L169.2,554.1L168.7,554.7L167.5,554.3L167.1,553.4L166.7,554.1L165.8,553.8L165.7,554.3L167,554.4L168.4,555.3L169,555.3L170.3,557.4L169.1,558.4L168.4,558.4L168,559.3L166.6,558.2L166,558.4L163.8,557.4L162,556.3L161.8,555.6L160,554.5L158.5,554.2L157.2,553.6L155,553L153,552.1L153.3,551.2L153.9,551.3L153.3,549.3L153.4,547.9L152.8,549.8L151,551.3L148.6,551.4L146.3,550.7L146.8,549.7L145.5,550.2L141.7,549.9L140.6,550L135.3,551.6L134,553.4L134.4,552.2L135.2,551.3L135.8,551.2L134.7,550.4L132.3,550.3L132.9,549.8L132,549.6L132.3,548.5L130.8,549.7L128.8,548.7L128,548.9L128.8,547.8L127.4,548.9L127.5,549.7L125.3,550.6L125.4,549L126,549.1L128.4,547.8L127.9,546.9L126.9,547.7L127.4,546.7L125.7,547.4L124.8,547L126.7,545.9L125.3,546.4L124.5,545.3L124.8,544L123.6,545.6L123.1,544.2L122.8,545.7L122.1,546.2L121.6,545.6L120.8,546.8L119.2,547.1L119.8,544.9L119,545L118.4,547.4L119.4,547.6L118.7,549.7L119.6,548.7L120.3,549.9L119.7,551.6L121.1,552.9L120.3,553.9L119.4,554L118.9,552.4L118.7,554L117.9,554.3L116,553.9L114.9,555L115.2,554L114.7,552.9L114.6,554.5L113.5,554.3L113.7,556.8L112.5,555.7L112.9,556.6L111.3,558.7L111,558.8L110.5,557.4L110.3,558.7L109.8,558.7L108.8,560.4L107.6,560.5L107.2,560L106.4,561L105.8,561L104.8,560.3L105.2,559L106.6,558.4L108.7,555.9L108.2,556L106.7,557.2L105.2,556.2L105.7,554.1L106.9,552.5L107.3,549.9L106.7,548.5L108.1,547.9L110.5,545.8L111.3,546.9L112.1,547.1L112.9,546.2L115.5,546.8L113,545.8L111.6,544.8L112.9,542.9L113.9,542.3L113.2,542L112.3,542.9L111.9,544.1L110.1,544.2L109.4,543.8L108,544.8L107.5,545.9L106.3,546.2L105.1,547.5L105.5,548.5L105,548.5L103.3,550.3L103.6,551.2L101.7,553L102.3,553.8L101.4,555.4L99.8,555.5L100.6,555.8L100.5,556.9L97.6,558.1L97.8,559L96.2,559.5L96,562.3L96.4,561.9L97.7,562L99.1,562.7L99.6,563.5L99.1,564.5L98,565.5L97.1,565.6L96.4,566.5L96.7,567.4L95.8,569.3L94.7,569.9L93.7,570L92,570.7L92,571.4L91.1,571.7L91.2,572.6L89.9,572.1L89.3,573.9L88,573.7L88.1,574.7L87.3,574.4L85.8,575.8L86.7,575.5L86.6,576.7L85.6,578.3L84.2,578.4L82.8,579.9L82,579.1L80.6,581L80.4,580.5L79.6,581.3L79.7,582.1L78.7,581.6L77.7,581.9L77,582.9L78.5,583.9L76.9,585L76.7,585.8L76.1,584.8L76,585.9L75.2,585.5L74.9,586L72.2,586.5L71.9,588L71,588.6L71.7,586.8L70.6,586.4L69.6,587.3L68.1,588.1L67.3,589.1L65.9,588.5L64.1,589.7L62.9,589.5L63.7,587.5L62.6,587.5L61.9,589.3L61,590.5L60.3,590.3L60.6,591.3L59.7,590.8L59.2,591.8L58.2,591.4L58.3,589.8L57.8,589.3L57.3,589.9L57.8,590.7L57.7,592L56.4,592.2L55.6,590.6L54.8,591L55.6,591.9L53.9,592.8L54.7,593.2L55.2,594.1L54,593.3L52.7,594.2L50.5,593.8L49.2,594.3L49,594.8L47.6,595.2L46.7,594.8L46.5,593.5L47.7,593L48.6,591.6L51.8,590.6L53.4,590.8L54.2,592.2L54.5,590.3L56.5,590.1L58.1,588.2L59.8,586.5L62,585.2L64.9,584.5L66.5,584.6L65.8,586.1L66.3,586.9L66.5,585.7L67.8,586L68.7,586.9L69,586.4L67.5,585L68.6,583L71.3,580.8L72.6,580.3L75.2,578.8L76.4,579.3L76.5,577.8L77.9,575.9L79.2,575L80.9,573.4L81.7,569L82.5,568.7L81.9,567.8L82.4,566L84.1,564.4L84.4,563.1L83.9,563.2L79.6,565L78.1,563.5L78.4,561.8L77.2,562.8L76.7,564.1L77.2,565.9L76.4,566.6L75.7,566.2L74.6,563.4L73.3,562L72.5,563.1L71.9,562.2L70.9,561.6L71,560.7L69.1,561.8L66.6,562.8L66.4,563.4L64.7,564.1L64.1,563.2L64.9,562.4L65,560.8L64.2,558.3L64.7,557.5L65.8,556.7L64.7,553L63.8,551.1L63.3,551.2L63.1,552.3L62.3,552.3L60.7,553.1L58.4,553.3L56.6,552.7L56.5,551.2L55.9,550.7L54.9,548.7L53.9,548.2L53.4,547.4L54.2,546.8L52.6,546.7L54.4,545.2L54.5,544L53.9,543.1L54.7,542.9L53.8,541.4L53.4,542.1L52.7,541.9L52.7,540.5L51.8,539.8L51.8,539.1L52.5,538.6L52,538.1L51.1,538.2L51.3,537.2L52.6,537.2L51.8,535.9L53.4,535.9L53.2,534.7L53.7,533.6L57.5,529.9L57.5,529.1L58.7,526.7L59.6,526L60.7,525.7L62,526.3L63.3,527.9L64.3,527.9L65.8,526.7L67.5,524.9L68.3,525.3L69.9,525.5L71.5,525.2L73,523.2L72.6,520.6L72.7,519.5L71.8,518.1L71,517.8L71.5,517L72.8,517.3L73.6,516.6L73.7,515.7L72.5,514L71.8,515.1L70.8,514.8L69,515.5L67.6,516.5L66.5,518L66.5,516.6L65.6,515.4L65.1,515.7L65.9,516.7L65.1,516.7L64.1,515.8L61.3,515.5L59.1,516L55.2,514.1L54.6,512.8L55.1,511.9L54.3,510.7L53.9,509.4L54.7,509.7L55.9,508.7L55.3,508L52.4,506.9L50.7,505.2L50.7,504.5ZM24.9,603L26.6,601.7L26.8,600.9L27.7,600.4L28.9,600.7L28.6,600L29.3,599.1L31,598.7L31.9,599.3L31.4,600.2L29.2,600.9L28,602.2L24.6,603.3L24.9,603ZM28.5,573.3L29.6,573.6L29.2,574.1L28.5,573.3ZM20.4,602.1L21.6,602L21.7,602.9L20.5,602.6L20.4,602.1ZM26.8,568.3L28,568.2L27.3,568.8L26.8,568.3ZM16,603L17.2,602.5L17.1,603.3L16.1,603.5L16,603ZM34.4,517.8L35.3,516.1L35.5,517L37.7,518.5L39.4,517.9L40.5,518.8L40.5,519.8L42,521.2L44.8,522.4L43.9,523.5L42.1,523L40.8,524.5L40.4,523.2L39,521.1L37.5,519.7L36.7,519.4L35.2,520L34.4,519.3L34.4,517.8ZM7,603L8,602.6L8.6,602.9L8,603.5L7,603ZM23.4,539.9L24.2,539.3L24.1,540L26.2,542.3L24.4,541.4L23.4,539.9ZM0,602.3L1.1,602.8L2,602.7L3.1,603.6L5,604.1L2.8,604L0.3,603L0,602.3ZM-6.2,601.2L-4.6,601.4L-1,601.3L-1,600.5L0,599.9L0.7,600.9L-0.6,601.6L-0.2,602.3L-2,602.5L-3.5,602.2L-6.2,601.2ZM-10.2,599.4L-9.2,600L-9.8,600.8L-10.4,600.4L-10.2,599.4ZM-11,601.2L-9.6,601L-9.7,601.5L-10.8,601.8L-11,601.2ZM-15,601.4L-13.6,600.4L-13.1,599.3L-12,599.5L-12.5,600.5L-11.1,600.8L-11.5,601.8L-12.3,601.4L-14.2,601.9L-15,601.4ZM-18.1,599.6L-15.6,599.7L-15.2,598.9L-14.6,599.3L-15.4,600.5L-16.2,600.6L-16.6,600L-18.1,599.6ZM-20.1,597.5L-18.7,597.7L-18.3,598.8L-19.5,600L-20,599L-19.3,599.1L-20.1,597.5ZM-30.2,592.5L-29.3,592.6L-28.9,593.1L-30,593.6L-30.2,592.5ZM-35.2,593.3L-34,594.1L-33.1,596.2L-34,594.7L-35.2,593.3ZM-40.8,588.6L-39.1,588.5L-38.4,587.7L-38.1,588.3L-40.5,589.3L-40.8,588.6ZM-55.8,576.6L-54.3,576.5L-54.4,577.8L-55.8,576.6ZM-57.6,570.9L-56.6,570.8L-54.7,571.9L-53.9,573.8L-54.7,573.2L-55.2,573.4L-56.4,573.1L-56.9,571.3L-57.6,570.9ZM197.4,577.4L198.2,576.7L198.7,577.2L198.2,577.9L197.4,577.4ZM196.5,577L196.6,576.1L196.2,575L197.1,575.3L197.6,576.8L196.5,577ZM194.7,574.9L194.8,574.4L195.8,575L195.8,576.5L194.7,574.9ZM187.6,570L187.8,569.6L188.6,570.7L187.6,570ZM187.1,569.1L187.4,568.2L188.9,568.2L189,569.2L188.2,569.7L187.1,569.1ZM186.2,576.9L186.2,576.1L187.6,575.5L188.2,576L188,576.9L187,577.9L186.9,576.9L186.2,576.9ZM184.9,573.1L185.5,571.2L184.9,571L185,569.8L186.8,569.5L188.6,571.4L190,571.8L191,572.6L192.7,574.5L191.4,574.2L191.2,575L192,574.6L193.4,575.3L193.6,576.5L194.4,575.9L194.7,576.4L194.5,578.1L195,577.6L195.8,579.3L195.7,580.1L194.4,580.4L193.4,580.2L193.9,579.4L192.5,579L192.1,577.4L191.5,577.9L191.8,578.9L191,578.8L190.5,577.6L189.6,577.5L191.5,579.9L192.1,579.3L193,580.4L192.2,580.3L192.9,581.2L192,581.3L190.1,579.8L189.2,577.9L188.2,578.3L188,577.5L189.4,576.3L188.2,575.3L185.8,574.3L186.3,573.7L186.1,572.3L185.5,573.5L184.9,573.1ZM182.7,574.2L183.7,574L183.2,574.7L182.7,574.2ZM180.3,567.2L180.7,566.3L181.7,566.1L182.4,566.9L182.1,565.7L181.4,565.3L181.9,564.6L184.4,564.6L185.4,564.3L186.7,565.5L188.7,566.7L187.8,567.7L186.4,567.9L186.3,568.6L185.3,568.5L184.4,569.2L183.9,568.5L184,572.3L183.4,573.2L182.7,572.5L182,570.8L182,569.3L181.4,569.3L180.3,567.2ZM174.6,555.9L175.8,556.7L176.1,557.5L176.6,557.1L178.2,556.9L178.4,557.5L180.2,559.2L180.8,560.6L179.6,559.3L178.7,558.9L179.3,559.9L180.5,560.7L181.4,562.6L179.6,565.9L179.1,566L178.5,564.6L178.9,563.1L178,562.3L177,560.9L176.9,560L175.2,557.3L174.6,555.9ZM173.9,564.8L174.6,562.9L176.3,563.6L177.2,563.4L177.6,564.6L179.7,568.3L180.7,571.9L180.8,572.7L180.1,572.3L177.5,569.4L175.5,568.5L176.1,568.4L176,567L175.3,566.6L175.5,565.3L174.8,565.6L173.9,564.8ZM173.5,565.9L173.6,565L174.8,565.7L174.9,567.4L174,567.8L174.2,566.7L173.5,565.9ZM169.1,561.4L168.9,560.3L169.5,559.5L169.1,558.6L169.9,559.2L170.9,558.7L171.5,557.8L173.2,558.6L175.3,558.7L175.8,559.6L175,560.1L175.9,560.4L177.1,562.7L176.1,563.2L173.7,562.2L174.1,563.7L173.8,564.8L173,564.7L171.6,563.5L171.2,563.6L170.2,562L169.1,561.4ZM120.8,555.1L121.2,554L122.6,552.2L123.6,550L124.3,550.9L122.4,553.8L122.9,554.1L120.8,555.1ZM120.4,551.4L120.8,549.5L121.6,548.6L121.6,550.3L121.2,552.1L120.4,551.4Z" },
  "04": { name: "Arizona", bounds: [142.3, 313.3, 264.6, 456.3], path: "M145.1,407L145.7,406.7L147.1,407.1L148.8,406.9L148.9,406.1L150.3,405.1L150.7,403.8L150.2,400.8L148.6,400.6L147.4,400.1L147,398.6L147.8,397.3L148.3,394.9L147.5,393.9L148.3,392.7L148,391.7L149.9,391.5L150.2,390.9L151.7,389.4L152.4,389.1L152.8,386.2L153.5,386L153.6,382.4L154.2,382.1L153.9,380.5L156.1,378.7L156.8,377L158.7,376.7L160.1,376.1L162.2,374.6L162.8,373.6L162.3,372.5L161.4,371.9L159.8,369.6L158.9,369.3L159.3,367.7L158.7,366.1L158.9,365.7L158.5,363.2L157.3,361.8L156.9,360.1L156.2,359.1L156.8,356.2L157.7,354.7L157.1,354L158.4,353.5L158.7,352.8L159,349.1L158.8,347.1L158.2,345.1L159.2,342.4L158.7,341.4L158.7,340L159.1,339L159,337.8L159.5,336.8L160.1,336.5L159.3,334.7L159.7,332.8L159.5,331.4L159.9,331.1L162.2,330.9L163.1,330.6L164.1,330.8L164.2,331.3L166.6,331.5L167.5,333.2L167.3,333.6L168.4,334.8L170,334.9L172.2,331.7L172.6,331.5L173.5,327L174.5,321L176,313.3L184.7,315L202.7,318.2L222.6,321.6L238.8,324.1L239.3,324.3L254.3,326.5L264.6,328L259.5,365.1L257.6,378.5L252.9,412.9L251.4,423.6L246.8,456.3L228.7,453.6L219.9,452.3L208.2,450.5L176.3,432.1L171.7,429.5L142.3,411.7L142.9,410.5L142.9,409L143.9,408.4L145.1,407Z" },
  "05": { name: "Arkansas", bounds: [523, 352.2, 613.7, 434.7], path: "M523,355.3L535.9,355L549.9,354.7L564.7,354.2L586,353.2L603.6,352.2L603.9,353.9L605,354.4L605.4,355.4L605.2,357.3L604.5,358.3L602.8,359.5L602.6,360.5L601.2,361.7L600.2,364L611.9,363.1L612.2,363.8L613.7,365.2L613.1,365.7L612.4,365.3L611.5,365.7L611.6,366.4L612.7,367.3L611.3,367.6L610.8,368.7L609.7,369.2L609.1,368.8L608.4,369.4L608.3,370.5L609,371.2L610.1,370.8L610.2,371.6L608.4,372.9L609.4,373.7L609.2,374.5L607.9,373.5L607,373.8L606.9,374.8L607.5,375.7L606.9,377.1L606.6,375.7L605.7,375.7L604.8,376.8L604.7,377.7L605.5,377.8L605.8,377L606.6,377.6L606.1,379.5L605.1,379.7L605.4,380.6L606.3,380.7L606.9,381.5L606.1,382.1L607.1,383.2L606.5,383.7L605.8,383.4L605.2,383.8L604.6,385.9L603.1,385.7L602.8,386.7L604,387.7L604,388.7L602.4,389.9L600.9,390.5L600.6,389.4L599.8,389.5L600.3,390.8L600.5,392.4L600.2,393.1L599.4,393L599.3,391.4L598.4,393L598.9,393.7L600.2,393.7L600.4,394.3L599.7,395.2L598.9,395.3L598.8,394L598.1,394.5L598.2,395.7L599.1,397.5L598.3,398.7L598.9,399.8L598.6,400.4L597.2,401.3L597.3,402.4L596.6,402.5L596.8,401.5L595.3,401.6L595.8,402.9L595.4,403.6L594.1,403.9L593.9,405.3L592.8,404.5L592.3,405.2L593.2,405.9L594.5,405.8L594.2,406.9L592.8,406.3L592,407L592.1,407.6L593.6,408.2L593.4,409.4L591.5,409.7L592.1,410.6L591.4,411L591,410.1L589.7,410.8L589.9,411.3L591.2,411.9L590.2,413.3L590.8,414.5L591.8,415.1L588.9,415.5L588.9,416.6L589.5,417L590.4,416.7L591.1,417.7L590,418.1L588.7,417L587.4,417.8L589.2,418.9L589.3,419.6L587.6,420.4L588.5,421.8L587.6,423.2L588.8,422.9L588.9,421.8L589.6,422.4L589.5,423.3L588.2,423.7L588.9,424.5L589.9,424.2L590.4,422.8L590.9,423.3L589.5,425.1L589.5,426.3L590.4,427.7L590.9,426.5L591.4,426.9L590.5,428.1L590.7,429.8L590.4,430.1L588.9,430L588.6,430.7L590.1,431.7L589.4,433.1L574.5,433.7L569.4,433.9L547.6,434.4L535,434.7L534.8,422.5L533.6,422.1L533.2,422.5L532.1,421.6L531.3,422.6L530,422L528.8,422.8L528.5,422.1L527,421.6L526.9,420.5L526.4,420.7L526.6,393.5L526.8,380.5L523.6,359.8L523,355.3Z" },
  "06": { name: "California", bounds: [18.5, 160, 162.8, 407.1], path: "M77.2,374.3L78.2,374.7L79.8,376.1L81.1,376.9L81.8,378.8L81.3,379.5L80.5,378.8L78.9,378.3L78.6,377.5L79,376.1L77.8,375.5L77.2,374.3ZM74.7,384.2L75.3,384.3L76.4,387.1L78.3,390L76.8,390.1L75.8,388.7L74.7,384.2ZM65.2,358.4L66.4,358.7L66.2,359.3L65.1,359.1L65.2,358.4ZM58.3,374.3L59.2,374.4L60.7,376.1L59.8,376.2L58.6,375.5L58.3,374.3ZM56.6,355L58.3,356.1L59.5,356.3L60.5,357.4L61.7,357.8L62.4,357.2L63.6,357.8L62.6,358.5L60.7,358.3L59.5,358.6L56.9,357.4L57.1,356.2L56.6,355ZM50.3,355.2L51.7,355.4L54.1,355.4L53.9,356.3L55,356.9L54.9,357.8L51.9,358.1L51.2,357.4L50.3,355.2ZM46.8,353.4L48.6,353.1L49.4,354.4L48.3,354.4L46.8,353.4ZM32.6,160L40.3,162.3L46.5,164.1L49.8,164.8L51.3,165.4L57.9,167.3L62.1,168.4L68.2,170.2L83.7,174.8L95.8,178L100.5,179.2L94,204L92,212.3L88.8,224.3L84.5,240.5L83.3,245.5L94.8,262.8L101.5,272.9L116.6,295.6L132.1,319L144.4,337.5L156.8,356.2L156.2,359.1L156.9,360.1L157.3,361.8L158.5,363.2L158.9,365.7L158.7,366.1L159.3,367.7L158.9,369.3L159.8,369.6L161.4,371.9L162.3,372.5L162.8,373.6L162.2,374.6L160.1,376.1L158.7,376.7L156.8,377L156.1,378.7L153.9,380.5L154.2,382.1L153.6,382.4L153.5,386L152.8,386.2L152.4,389.1L151.7,389.4L150.2,390.9L149.9,391.5L148,391.7L148.3,392.7L147.5,393.9L148.3,394.9L147.8,397.3L147,398.6L147.4,400.1L148.6,400.6L150.2,400.8L150.7,403.8L150.3,405.1L148.9,406.1L148.8,406.9L147.1,407.1L145.7,406.7L145.1,407L99.5,401.7L99.7,399.5L98.9,397.9L97.9,398.1L98.3,395.1L98.1,394.6L98.9,393.6L99,390.4L98.7,387.7L96.5,382.3L95.2,380.7L94.5,379.3L93.3,378.6L92.5,376.4L91.1,374.9L90.2,374.4L89.1,373L87.9,371L86.4,369.8L86.2,370.7L84.7,370.8L82.1,369.3L82,368.5L82.8,368L83,367.2L82.6,364.7L81.7,362.5L80.8,361.9L77.6,361.4L76.4,361.8L75.6,360.8L74.2,360.3L71.8,358.4L71,358.1L69.7,356.7L69.3,354.1L67.9,352.2L67.5,352.1L66.6,350.6L65,349.3L63,348.7L62.2,349L60.8,348.1L59.3,347.9L57.2,346.2L54.9,345.2L52,344.6L48.8,344.3L48.5,342.4L46.5,340.5L47.9,338.2L47.6,336.7L48.6,334.9L48.3,333.4L47.9,333.2L49.6,329.9L49.8,328.1L48.4,326.9L47.9,327.2L46.4,325.7L45.9,324.6L46.9,322.9L47.3,321.2L46.9,320.1L45.3,319.3L44.1,316.9L43.4,314.7L41.6,313.3L41.3,312.3L41.4,310.6L39.8,307.8L39.7,305L38.7,304.2L38.2,301.9L37.2,299.7L35.7,298.4L34.8,296.1L35.1,294.7L35,292.2L35.7,290.6L35.1,289.9L36.3,289L36.7,289.9L38.1,289L39.7,285.9L39.2,282.7L38.3,281.4L37.4,281.7L35.1,281L33.7,279.2L32.7,276.5L32.1,276.3L32,275L31.4,274.3L31.6,273L32.5,270.7L32.3,268.8L32.4,267.8L31.6,266.5L33,263L33.3,260.8L35.3,260.7L35.3,262.5L34.9,263L34.5,264.6L34.7,265.7L36.3,266.7L37.4,268.6L37.9,268.7L38.5,270.1L39.3,270.3L38.4,268.8L38.3,266.9L38.6,265L37.5,263.4L37.7,262.8L36.4,261.7L37.3,260.4L37.3,259L36.2,258.6L35.8,257.2L37,257.2L37.2,256.5L38.3,256.8L39.2,256.3L38.9,254.7L37.6,253.4L35.7,253.7L35,255.7L35.7,256.7L34.8,256.9L34.4,257.6L35.2,259L34.2,258.4L34.2,259.9L33.2,259.9L32.9,259L31.6,257.4L30.8,257.4L29.8,255.8L29.4,254.6L28.5,253.7L27.6,253.2L26.8,253.9L26.2,253.5L27.8,251.3L28.3,250.3L28,248.5L28.5,247.8L28,246.7L27.2,246.7L27.5,245.4L27.1,243.1L25.4,241.1L24.4,239.5L23.2,235.6L20.9,231.8L20.1,229.8L20.1,229L21.4,227.7L21.6,226.9L21.2,221.5L21.4,219.4L22.1,217.8L23.6,215.7L23.6,214.5L24,212.7L23.7,211.7L24,209.2L23.3,208.2L23.3,207.1L22.2,204.3L21.6,203.7L21.6,201.9L20.5,200.9L18.5,197.2L19.1,196.1L19.2,194.3L18.9,193.1L19.9,191.4L21.4,189.6L24.8,186.1L26.6,183.8L27.7,181.7L27.2,180.9L27.7,178.9L29.2,177.3L31.3,172.9L31.7,170.4L31.6,165.8L31.2,165.8L30.4,164.4L31.9,162.4L32.6,160Z" },
  "08": { name: "Colorado", bounds: [264.6, 237.2, 395.3, 340.7], path: "M277.1,237.2L285.9,238.4L301.1,240.3L320.9,242.6L324.8,243.1L333.1,244L347.8,245.4L350.9,245.6L361.4,246.5L370.8,247.3L382.2,248.2L395.3,249L393.9,271.9L392.2,300.4L391.1,316.6L390.6,326.6L389.7,340.7L377.9,339.9L372.5,339.4L348.5,337.6L336.7,336.5L334.6,336.2L315.3,334.3L303.3,333L303.2,332.8L292.5,331.5L278.8,329.9L264.6,328L265.8,319.4L266.4,315.9L268.4,301.5L268.4,299L269.8,288.9L271.2,279.7L275.5,248.5L275.9,245.8L277.1,237.2Z" },
  "09": { name: "Connecticut", bounds: [871.2, 177.7, 902.2, 208.3], path: "M871.2,184L879,182.3L882.2,181.6L882.3,182.5L883.1,182.1L883.1,181.4L898.7,177.7L898.8,178L901,185.8L902.2,191.1L901.6,191.4L902.1,192.8L901.7,193.5L900.2,193.5L899.1,194.3L898.1,194.5L897.4,195.1L896.5,194.8L896.1,195.6L893.5,197L892.3,196.9L890.9,197.9L890.4,197.6L888.7,198.1L888.5,198.7L887.4,198.4L885,199.4L884.7,198.4L883.5,200.9L882.8,200.9L881.9,202.6L881,202.4L879.9,203.8L879.4,203.7L878.1,204.5L878.1,205.6L876.4,206.3L875.2,207.7L874.8,207.4L874.1,208.3L874,207.7L872.3,206L875.7,202.6L874.1,201L872.9,193.7L871.2,184Z" },
  "10": { name: "Delaware", bounds: [844.9, 241, 863.7, 272.5], path: "M849.2,245.8L849.4,246.3L849.2,245.8L849.2,245.8ZM844.9,244.6L845.6,243L846.5,241.9L848,241.2L849.2,241L850.8,241.4L850.2,242.4L849.7,244.4L848.6,245.5L848.5,246.7L849.4,247.4L849.3,249.3L851.8,252L852.8,252.5L854.1,254.7L854,255.9L854.8,258L856.4,259.3L856.8,260.7L859.5,262.9L860.6,263.2L861.3,262.7L862.4,265.6L863.7,270.3L857.8,271.6L852.6,272.5L845.8,248.4L844.9,244.6Z" },
  "11": { name: "District of Columbia", bounds: [825.9, 265.3, 829.7, 269.9], path: "M825.9,267L827,265.3L829.7,267.2L827.9,269.9L827.8,268.6L826.9,267.6L825.9,267Z" },
  "12": { name: "Florida", bounds: [660.3, 464.9, 824, 606.6], path: "M814.6,594.5L815.5,593.1L815.9,593.7L815.1,594.7L814.6,594.5ZM812.7,596L813.3,595.1L813.8,595.6L812.7,596ZM807.4,599L811,596.7L811.5,597.2L808.5,599.2L807.4,599ZM793.7,604.2L794.8,602L797.8,599.8L799.4,598.3L800.5,597.7L803.5,598.5L804,599.5L805.1,600.1L802,601.7L801.7,601.3L799.7,601.7L799.6,602.2L796.4,604.1L793.8,604.8L793.7,604.2ZM789.6,605.4L792.1,604.4L791.8,605.5L789.6,605.9L789.6,605.4ZM786.4,605.5L786.8,604.7L787.6,604.7L787.5,605.6L786.4,605.5ZM777.4,558.3L777.9,558.6L779.8,562.4L781.8,563.2L782.3,562.8L783.3,563.1L781.7,563.9L779.5,562.7L777.6,559.3L777.4,558.3ZM770.3,606.2L771.4,605.8L771.8,606.2L770.3,606.6L770.3,606.2ZM720.4,495.2L722.4,494.1L722.1,495L720.6,495.7L720.4,495.2ZM710.8,468.8L711.3,470.2L712.3,471.2L712.5,472.8L713.2,474.2L714.2,475L740.7,473.2L747.9,472.7L765.8,471.5L765.5,472L766.3,473.3L766.4,474.7L767.3,476L769.7,475.6L769.9,472.9L769.8,471L768.7,469L768.7,466L769.7,466L770,464.9L771.1,464.9L771.7,465.4L772.9,465.3L774.7,466.1L776,465.9L778.3,466.3L779.2,465.8L780.1,466.1L780.5,466.3L780.6,468.5L781,470.2L781.6,471.1L782.8,475.7L785.3,482.3L786.6,484.6L787,486.3L789.6,491.1L792.8,496.3L794.9,499.6L801.4,507.6L804.6,511L806.1,513.6L805,514.9L805,517.2L805.8,520.1L806.6,521.9L808.2,524.5L811.5,529.2L814.2,534.3L815.5,536.8L818,540.7L818.2,541.3L820,544.3L822.1,549L822.8,554.1L822.8,556.9L823.1,561L823.2,565L823.9,570.5L823.8,574.5L823.4,573.3L822.7,572.9L821.8,573.7L821.5,575.6L821.1,576.2L821.2,577.2L820.8,578.1L820.9,579.6L821.4,581.1L821.8,581.3L821.4,582.4L820.7,583L820.9,583.7L822.4,582.7L824,577.8L823.8,580.3L822,584.9L821.6,586.6L817.9,591.7L816.4,593.2L816.1,593.1L819.1,589.4L819.5,588.3L819.7,586.1L817.6,586L815.2,586.9L813.6,588L812.2,587.4L810.9,587.8L810.5,588.7L806.9,589.7L805.5,588.9L804.7,587.7L804.8,585.2L805.3,585L803.9,582.4L802.9,581.6L802.9,580.9L801.9,579.6L801.3,579.4L800.6,577.8L799.4,578L798.4,576.1L796.6,575.8L793.1,574.2L791.9,575.4L790.3,573.2L788.8,570.5L787.5,566L786.5,564.2L785.5,563.3L783.2,562.2L783,561.3L782,561.5L782.3,562.3L781.4,562.6L780.2,559.3L779.2,558.4L780.2,557.9L781,558.5L781.3,555.4L781,553.7L780.3,553.5L780.4,552L779.6,552.2L778.5,553.2L779.5,555.9L777.5,556.8L777.3,557.8L777.1,556.4L776.5,555.5L775,553.9L772.6,550.8L771.7,549L769.4,545.8L766.5,542.9L765.2,540.9L766.1,541.7L767,541L768.1,539.2L769.8,535.5L770.6,535L771.2,533.2L770.6,531.9L769,531.7L769.7,533.8L767.9,533.5L768.3,532.7L767.6,530.8L764.7,529.8L764.9,531.1L764.2,531.7L765.4,532.3L766.3,532.3L767.4,534.3L766.8,535.2L766.8,536.8L765.2,537.3L765.6,538.9L765.1,539.2L764.7,537.1L763.4,535.4L762.5,534.8L761.9,533.4L761.9,530.4L761.4,529.2L760.7,526.1L761.3,526L761.5,527.7L762.1,529.4L762.7,529.5L762.5,527.8L761.9,527.3L762.6,525.8L763.6,520.7L763.6,517.1L763,515.9L763,514.8L762,514.4L762.2,513.5L761.3,511.5L761.9,510.2L760.1,508.2L760.3,507.6L759.6,506.6L758.8,506.7L758.9,505.1L758.4,504.9L755,504.9L754,506.1L753.1,504.3L752.9,503.1L751.3,502.8L751,501.6L749.9,500L748.4,499.8L747.9,499L746.1,498.3L745.8,496.2L745.3,494.9L744.5,494.9L742.8,494.1L741.6,492.8L741.6,492.2L740.3,490.6L739.3,489.9L737.1,489L734.2,487.9L732.2,486.7L730.3,487.2L729.7,487.7L727.4,487.4L727.5,488.1L725.8,489.7L726.6,491.5L726.4,492.2L724.7,492.1L724.3,491.7L722.7,492.3L720.4,494.5L719.9,494.5L716.3,497.4L716.5,496.2L715.7,496L714.3,497.8L711.8,498L712.9,498.9L713,499.6L714.2,499.9L718.2,497.6L719.9,495.8L720.1,496L718.6,497.8L713.7,500.8L710,499.1L708.6,499.1L707.4,499.8L706.4,498.1L705.7,496.1L706.2,495L706.5,497L707,498.7L707.6,499.1L708.2,498.2L708.1,496.6L706.6,494.4L705.7,493.6L704,493.3L702.9,492.6L701.6,491.4L699.6,490.7L697.9,489.5L695.8,488.4L693.3,487.4L688.8,486.2L686,485.8L680.7,485.8L678.4,486.1L675.2,486.9L670.7,488.3L668.5,488.8L668,488.7L663.7,490.1L664.7,489.5L664.1,489.2L664.9,488.5L665.2,487L666.3,486.4L665.4,485.9L664.6,484.7L665.4,481.9L665.1,480.9L662.5,479.6L662,478.7L660.3,477L661,474.7L660.7,474L669.5,473.1L681.5,472.1L693.6,470.8L710.8,468.8Z" },
  "13": { name: "Georgia", bounds: [689.2, 373.7, 786.9, 476], path: "M689.2,379.7L693.3,379.3L701.4,378.2L712.7,376.8L725.6,375.2L725.5,375.1L734.9,373.7L734.8,375.1L732.9,376.8L732.5,378.1L731.6,379L731.2,380.4L731.7,381.5L733.8,382.8L735,382.8L736.7,384.6L738.4,385.4L739.5,384.9L741.1,385.4L741.9,387.4L742.7,387.9L743.8,389.4L744.4,391.4L745.5,392.3L746.4,393.6L747.4,394.4L748.3,396.2L748.9,396.1L751.1,397.7L752.6,398.1L754.5,399.6L756,402.3L757.3,403.1L757.8,402.9L759,403.4L760.4,405L761.9,405.8L761.6,407.7L762.4,408.5L763.6,408.7L763.7,410L764.7,410.7L765.4,410.5L765.7,411.8L766.9,412.6L768.7,412.8L769.6,413.6L771.3,414.4L771.3,416L772.2,416.9L772,417.3L773.2,418.1L773.2,419.3L773.7,420.1L773.5,421.1L774.3,422.2L774,422.7L775.1,423.8L776.8,424L778.7,425.8L778.6,426.5L780.8,429.6L780.2,430.7L781.2,431.8L781.4,433.4L782.5,433.9L783.6,433.4L785.3,434.5L786.1,434.6L786.9,434.7L786.8,436L786,436.7L785.2,436.5L785,437.5L785.6,437.5L784.7,438.9L783.3,438.7L783.2,439.8L784,439.8L783.6,441.1L782.6,442.3L781.4,442.3L782.1,443.1L782.7,442.9L782.9,444.6L782.4,446.2L780.8,446.5L780.7,447L781.9,446.7L782.4,447.1L781,450.8L781.4,452.5L781.3,454.4L780.9,454.5L780.1,456.2L779.5,456.4L779.5,459.1L778.3,460.2L779.6,460.4L779.9,459.9L780.2,461.5L779.8,463.8L779.7,465.4L780.1,466.1L779.2,465.8L778.3,466.3L776,465.9L774.7,466.1L772.9,465.3L771.7,465.4L771.1,464.9L770,464.9L769.7,466L768.7,466L768.7,469L769.8,471L769.9,472.9L769.7,475.6L767.3,476L766.4,474.7L766.3,473.3L765.5,472L765.8,471.5L747.9,472.7L740.7,473.2L714.2,475L713.2,474.2L712.5,472.8L712.3,471.2L711.3,470.2L710.8,468.8L709.9,466.4L708.3,464.8L707.9,462.8L708.3,462.3L708.1,460.8L708.4,459.2L708.2,458.3L708.6,457.1L708.1,454.9L706.6,453.3L706.6,452.5L705.9,450.1L706.9,447.7L707.1,446L707.1,444.3L706.7,443.2L707.5,442.1L708.9,441L709.6,439.9L708.7,439.2L707.3,438.8L707.8,436.5L707.1,435.9L706.7,434.3L705.3,433.1L704.5,431.8L703.9,428.9L702.9,428.1L703.1,427.4L702.5,427L693.3,394L689.9,382.4L689.2,379.7Z" },
  "15": { name: "Hawaii", bounds: [216.2, 528.1, 332.1, 603.1], path: "M305.4,584.5L305.6,583.6L307.4,581.9L308.2,581.9L308.9,580.2L310.2,579.2L310.3,577.9L309.5,576.9L308.8,575.4L308.6,574L308.9,572.9L309.7,572.5L312,573.4L312.3,574L314,574.9L315.2,575.8L316.1,575.7L318,576.3L322.2,578.3L325.2,580.7L326.3,582L326.1,584.5L327.9,584.4L328.5,585.5L328.4,586.6L330.2,588.2L332.1,589.1L331.9,590.3L328.6,593.3L325.3,594.9L323.7,595.3L321.8,595.2L320.4,596.5L319.2,597L318.4,597.8L317.3,598.1L316.2,599.4L316.3,600L315.3,601.9L313.8,603.1L312.6,602L310.9,601L309.3,600.5L308.4,598.5L309.1,593.7L308.3,590.5L307.7,590.2L307.1,587.5L305.3,584.8L305.4,584.5ZM291.6,557.9L292.4,556L293.9,555.4L294.9,556L296.4,558.5L298.3,557.9L299.6,557.2L301.6,557.7L301.6,558L303.7,559.2L304.1,560L306.5,560.7L306.8,562.4L305.4,563.9L303.5,564.6L302.5,564.4L300.1,565.5L298.5,565.6L297.1,564.8L296.7,561.1L295.8,560.7L295.1,561.1L293.1,560.2L292.1,559.1L291.6,557.9ZM291.6,566.7L294.3,565L295,565.6L294.8,567L293.7,566.9L292,567.3L291.6,566.7ZM283.9,558.3L285.5,557.7L287.4,558L288.7,559.2L289.3,560.4L288.7,561.4L287.2,562L285.9,562.1L285,559.4L283.9,558.3ZM278.6,553.8L279.8,552.3L279.6,551.2L285.2,552L286,551.4L286.4,552.2L288,552.4L290.1,552.1L291.4,552.6L290.8,553.6L289.4,554.6L287.8,555L283.2,553.8L279.8,554.2L278.6,553.8ZM258.1,543L261.3,542.9L263.6,540.3L264.7,540L265.6,541.9L267.4,544.2L267.3,545.8L268.7,546.8L269,545.7L269.9,545.8L269.5,547L270.1,548.2L271.4,549.4L270.1,550.2L268.9,549.8L267.7,550.2L266.3,549.2L264.3,549L261.5,549.3L261,547.7L260.1,547L259.9,546L259,545.1L259,543.9L258.1,543ZM226.1,532.6L226.2,531.8L227,531.1L227.3,530.2L231,528.2L232,528.8L232.5,528.2L234.3,528.1L235.4,528.6L236.6,530.2L236.5,531L235.7,532.3L235.8,534.3L234.5,535.6L233.3,536.3L232.7,536L230,535.8L228.6,534.4L226.5,533.6L226.1,532.6ZM216.3,536.6L216.6,535.7L218.6,534.4L219.2,533.3L220,533.2L219.8,535.6L218.1,536.2L217.1,538.2L216.2,537.3L216.3,536.6Z" },
  "16": { name: "Idaho", bounds: [148.9, 35.9, 256, 209.6], path: "M170.5,102.4L170.4,99.9L171.3,98.5L170.9,95.6L170.1,94.1L170.8,92.4L174.5,75.8L178.3,58.7L180.5,49.6L183.6,35.9L198.1,39L193.3,61.5L193.5,61.7L194.9,65L195.6,65.7L195.6,67.2L196.8,68.7L196.4,69.6L196.9,71.1L195.8,71.8L196.4,72.5L196.4,73.5L197,74.2L195.3,74.3L197.8,76.9L198,78L199.6,79.3L200.8,79.7L201.6,82.3L202.3,82.9L203.5,85.1L203.7,86.9L204.5,87L205.3,88.4L204.8,89.7L205.5,91L206.8,91.9L206.8,93.8L208.1,93.1L209.1,94L208.7,94.6L208.9,95.6L211.1,96.2L211.9,95.7L212.9,95.7L213.4,96.3L212.4,99.3L211.5,99.3L211.7,100.6L210.8,101.7L210.7,102.9L210.1,104.2L209.5,104.3L209.5,106.4L208.4,106.3L208.1,107.3L208.9,108.1L208.2,109.1L208.3,110.3L209.1,111.4L208.6,111.8L209.1,113.1L208.6,113.7L207.2,113.4L205.8,114.9L206.6,116.3L206.4,117.5L205.3,117.9L205.5,118.7L205.2,119.7L206.6,120L207,121.3L208.1,122.6L209.4,122.1L209.8,121L210.6,121.4L211.6,121.1L213,119.7L213.8,119.4L214,118.4L214.6,118.2L215.7,119.8L216.9,121L216.1,122.8L217.2,123L216.7,124.4L217.2,125.9L216.9,127.4L217.4,129.2L218.4,130.8L218.6,132.3L219.5,132.8L219.3,133.3L220.2,134.2L219.9,136.4L219.1,136.6L219.4,138.5L220.7,139.8L220.8,140.7L222.5,140.1L224.1,141.5L224.3,143.3L224.7,143.8L224.7,145.2L224.2,145.5L225.1,147.4L224.6,148L224.8,149.1L226.5,150.7L227,151.6L227.5,151.3L227.4,150.2L228.5,149L229.5,148.7L230.4,149.3L232.1,149.6L232.9,150.3L233.4,150L234.6,150.9L235.4,149.2L236.7,148.5L237.4,148.6L238.2,149.6L239.3,150.1L240.6,149.7L241.4,150L243.3,149.7L243.8,151.1L245.7,150.6L245.9,150.2L247.3,150.7L247.8,150.5L249.1,151.2L249.6,151.1L248.9,149.7L250,148.5L249.9,147.5L251.1,147.6L251.5,146.7L252.6,147.6L253.8,150.1L253.6,151L254.7,152.3L254.9,153.3L256,153.9L249.8,193.3L249,198.2L247.2,209.6L239.5,208.4L228.5,206.6L228.2,206.4L200.2,201.7L197.7,201.1L188.6,199.3L184.8,198.3L181.5,197.8L176.9,196.8L159.6,193.2L148.9,190.7L157.9,150.5L158.3,149.4L158.9,149.3L159.2,148.3L160.4,146.1L160.1,144.5L160.8,144.3L161.7,143.3L161.4,142.3L160.7,142L160.9,141.2L159.7,141L159.1,139.7L157.9,139.9L157.3,138.9L158,138.2L157.4,136.6L158,136L158.2,134.8L159.5,134L159.8,133.2L161.9,129.9L164.2,129.1L166.6,126.2L166.4,125.1L166.8,124.1L167.7,123.5L169.2,121.9L171,118.1L172.9,115.7L173.5,115.4L173.8,114.4L175.7,112.3L175,110.6L175,109L174.4,108.3L173.3,107.9L173,107L172,106.8L170.9,104.3L170.5,102.4Z" },
  "17": { name: "Illinois", bounds: [575.1, 212.4, 646.8, 340.1], path: "M576.5,264.7L577.2,264.4L577.3,261.9L576.5,260.9L577.4,259.4L579.1,258.6L580.2,258.6L581.2,257.8L581.5,255.5L581.5,254.5L583,252.2L583.6,251.8L583.8,249.2L583.7,247.9L582.9,246.6L582,246.4L580.7,244.7L581.3,243.2L581.6,240.8L582.8,240.2L583.6,240.4L584.8,239.7L586.8,239.6L588.1,239.3L589.2,238L591.3,237.7L592.1,236.7L593.2,236.1L593.2,234L593.5,232.7L594.1,231.9L595.5,231L596,228.6L595.7,227.4L596.1,226.4L595.6,225.5L595.5,223.8L594.6,223L591.6,221.6L590.8,220.4L591,219.4L590,218.2L588.7,217.5L588.3,216.8L587,216.2L587,215.4L596.4,214.8L610.1,214.1L617.8,213.7L628.9,212.7L634.2,212.4L634.3,214.8L634,216.8L634.7,218.8L635.9,220.6L637.2,222.1L637.3,222.7L638.5,225.8L638.8,227.2L640.3,229.8L641.1,239.2L642.8,258.2L644,273.1L645,283.6L644.2,283.9L643.9,285.7L644.5,286.7L643.5,287.9L643.8,289.3L644.9,290.3L644.9,291.9L646.2,292.6L645.7,294.8L646.8,296.6L646.5,298.5L645.3,299.3L644.9,299.9L644.4,302.2L644.5,303L643.1,303.9L643.4,304.5L642.6,306.3L642.2,306.5L641.5,308.6L641,308L640.6,308.8L640.2,308.2L639.4,310.3L640.5,311.8L639.8,312L639.2,313.2L640,312.8L639.9,313.5L638.7,314.3L639.3,315.7L638.5,317L639.5,317.5L638,317.4L639.4,319.7L638.9,321.2L637.9,321.9L637.3,323.1L637.9,325L639.3,326.3L639,327.3L635.5,328L634.2,329.3L633.3,328.8L632.2,329.8L631.7,332.2L633,334L633.6,335.1L633.1,336.9L631.5,337.1L629.9,336.1L628.1,335.7L626.7,334.8L624.4,334.1L623.1,334.2L621.7,335.7L621.4,336.8L620.6,337.5L620.3,339.1L621.2,339.9L620.1,340.1L620,339.3L618.8,338.2L617.9,338.2L618.8,339.2L618.6,340L616.7,338.9L616.7,338L615,335.4L614.9,334.2L613.8,333.4L614.3,332.4L615.2,332L615.4,331L615,329.9L613.5,327.8L613.3,326.7L614.1,326.4L613.3,325.5L613.3,324.3L612,323.8L611.3,323L610.4,322.8L610.5,322.2L609,320.9L608.3,320.8L607.1,319.7L606.1,320.6L605.2,320.3L604.8,319.5L605.6,318.5L604.3,318.6L603.1,317.4L602.6,317.5L601.8,316.4L601,316.3L599.7,315.4L599.1,314.4L597.6,313.2L597.2,311.7L597.6,309.3L598.4,308.3L598.9,305.9L600,304.2L600.1,303.2L599.4,301.4L600.9,299.6L601,298.4L598.5,297L597.5,296.9L594.9,296.1L593.4,298.3L592.7,298.5L591.3,297.3L590.9,295.6L590.2,294.4L590.7,293.5L589.7,289.9L587.7,287.9L584.1,285.6L582.9,283.6L582.1,283.5L581.4,282.2L580.4,281.7L578.1,279.5L578.1,278L576.9,277.1L576.5,276.2L577,275L575.5,272.6L575.2,270.5L575.1,268L575.8,265.6L576.5,264.7Z" },
  "18": { name: "Indiana", bounds: [638, 223.9, 693.7, 320.2], path: "M640.3,229.8L641.3,230.5L642.5,230.3L642.2,231.2L644.9,231.4L647.2,230.6L650.2,228.9L651.9,227.6L669.2,225.8L685.6,223.9L685.8,225.4L688.5,247.4L689.6,257L690.7,268.2L692.5,284.3L691.3,285.7L692.5,286.9L692.7,287.7L692.2,289.1L693.7,289.3L693.2,290.4L693.5,291.6L692.2,291.5L690.7,292L687.5,294.5L686.1,293.7L685.1,293.5L682.9,294.1L682.6,295L683.6,298.2L682.4,300.1L680.6,301L680,303.7L678.7,305.1L677.7,304.8L677.1,305.1L676.8,306.4L676,307.9L676.2,309.6L676,311L675.6,311.5L674.2,312L674.1,312.8L672.8,311.7L671.6,311.8L669.8,310.7L669.6,309.1L668.2,307.9L667.8,308.7L668.6,308.8L667.4,310.1L666.3,309.9L666.9,310.6L666.7,311.4L665.5,311.7L665.6,313.4L666,314.3L664.6,314.6L664.4,316.1L663.4,316.2L663.6,315L662.3,315.5L661.7,315.1L660.8,313.4L659.7,313.6L659,314.6L656.7,315.7L656.3,318.2L655.3,318.7L654.6,317.4L653.9,317.4L650.6,315.6L649.3,315.6L648.3,316.5L646.7,315L646.2,316.1L646.9,317.1L646.7,318.3L645.6,318.5L645.3,316.8L642.7,317.7L641.3,316.7L640.8,317.5L641.5,319.4L640.9,320.2L639.4,319.7L638,317.4L639.5,317.5L638.5,317L639.3,315.7L638.7,314.3L639.9,313.5L640,312.8L639.2,313.2L639.8,312L640.5,311.8L639.4,310.3L640.2,308.2L640.6,308.8L641,308L641.5,308.6L642.2,306.5L642.6,306.3L643.4,304.5L643.1,303.9L644.5,303L644.4,302.2L644.9,299.9L645.3,299.3L646.5,298.5L646.8,296.6L645.7,294.8L646.2,292.6L644.9,291.9L644.9,290.3L643.8,289.3L643.5,287.9L644.5,286.7L643.9,285.7L644.2,283.9L645,283.6L644,273.1L642.8,258.2L641.1,239.2L640.3,229.8Z" },
  "19": { name: "Iowa", bounds: [487.5, 193.3, 596.1, 264.7], path: "M490.6,195.2L502.3,195.3L515.8,195.2L534.1,194.9L549.3,194.4L567.8,193.7L576.3,193.3L576.1,194.3L576.7,195.2L576.5,196.3L578.4,197.4L579.2,198.7L577.4,201.6L577.6,203.8L578.1,205.5L578.2,206.8L579,207.2L579.9,210.5L581.9,211.7L585.6,212.4L586.6,214L587,215.4L587,216.2L588.3,216.8L588.7,217.5L590,218.2L591,219.4L590.8,220.4L591.6,221.6L594.6,223L595.5,223.8L595.6,225.5L596.1,226.4L595.7,227.4L596,228.6L595.5,231L594.1,231.9L593.5,232.7L593.2,234L593.2,236.1L592.1,236.7L591.3,237.7L589.2,238L588.1,239.3L586.8,239.6L584.8,239.7L583.6,240.4L582.8,240.2L581.6,240.8L581.3,243.2L580.7,244.7L582,246.4L582.9,246.6L583.7,247.9L583.8,249.2L583.6,251.8L583,252.2L581.5,254.5L581.5,255.5L581.2,257.8L580.2,258.6L579.1,258.6L577.4,259.4L576.5,260.9L577.3,261.9L577.2,264.4L576.5,264.7L575.4,264.6L574.6,264.1L574.5,262.9L573.9,262.9L573,262L572.8,261.1L571.8,260.9L570.9,259.6L564.7,260.1L553.4,260.8L544.8,261.3L539.9,261.4L530.6,261.8L521.4,262L502,261.9L502.3,261.3L501.6,260.2L500.7,259.7L499.9,258.5L500.7,257.6L500.6,255.4L501.2,255.1L500.7,253.7L500.9,253L500.2,252.2L500.3,250.3L500,248.8L500.7,248.2L499.5,248.1L499.2,245.8L499.9,246L500.1,245.2L498.9,244.7L499.3,241.9L497.9,241.6L498.1,240.7L497.6,240L497.1,240.7L496.4,239.9L496.7,239.2L496.1,238.2L496.4,237.7L496,236.5L496.9,234L496.3,233.7L495.3,231.7L495.9,230.2L494.2,229.6L494.2,228.7L493.5,228.5L493.6,227L492.3,225.8L492.1,224.6L492.6,224.2L491.9,222.4L491.1,221.5L491.1,220.3L491.7,219.3L491.4,218.4L490.6,218.3L489.9,217.6L490.1,216.8L489.1,214.5L487.6,213.3L487.5,211.9L489,210L489.1,208.4L489.8,207.6L489.6,205.5L490.4,205.2L490.8,203.9L490.3,203.2L490,201.5L488.8,201.5L488.5,199.8L489.4,199.6L489.5,197.9L488.3,196.7L488.2,195.2L490.6,195.2Z" },
  "20": { name: "Kansas", bounds: [389.7, 271.9, 522.8, 344], path: "M393.9,271.9L404.8,272.5L422.4,273.5L432.4,273.9L443.4,274.3L453.9,274.6L464.8,274.9L479.9,275.1L495.4,275.2L509.9,275.2L511.7,277.3L512.8,277.5L513.1,278.1L514.6,278.2L515,277.5L516.5,277.7L516.3,278.3L517.4,279.2L516.6,280L516.8,280.7L517.6,280.3L517.3,281.4L516.1,281L515.8,282.3L514.8,282.8L514.2,284.9L513.5,284.9L513.5,285.8L514.5,286.7L514.7,287.4L515.7,288L516.5,289.2L517.3,289.1L517,290L517.2,291.2L518.1,291.9L518.5,293.2L519.3,293.4L520,294.1L520.9,293.8L521.3,294.4L522.6,294.4L522.3,295.2L522.4,306.9L522.6,322L522.6,326.1L522.8,343.8L506.8,344L489,344L471.8,343.8L458.9,343.6L443.3,343.1L432.6,342.7L428.5,342.5L414.1,341.9L401.9,341.4L389.7,340.7L390.6,326.6L391.1,316.6L392.2,300.4L393.9,271.9Z" },
  "21": { name: "Kentucky", bounds: [614, 283.2, 747.1, 351.5], path: "M621.2,339.9L620.3,339.1L620.6,337.5L621.4,336.8L621.7,335.7L623.1,334.2L624.4,334.1L626.7,334.8L628.1,335.7L629.9,336.1L631.5,337.1L633.1,336.9L633.6,335.1L633,334L631.7,332.2L632.2,329.8L633.3,328.8L634.2,329.3L635.5,328L639,327.3L639.3,326.3L637.9,325L637.3,323.1L637.9,321.9L638.9,321.2L639.4,319.7L640.9,320.2L641.5,319.4L640.8,317.5L641.3,316.7L642.7,317.7L645.3,316.8L645.6,318.5L646.7,318.3L646.9,317.1L646.2,316.1L646.7,315L648.3,316.5L649.3,315.6L650.6,315.6L653.9,317.4L654.6,317.4L655.3,318.7L656.3,318.2L656.7,315.7L659,314.6L659.7,313.6L660.8,313.4L661.7,315.1L662.3,315.5L663.6,315L663.4,316.2L664.4,316.1L664.6,314.6L666,314.3L665.6,313.4L665.5,311.7L666.7,311.4L666.9,310.6L666.3,309.9L667.4,310.1L668.6,308.8L667.8,308.7L668.2,307.9L669.6,309.1L669.8,310.7L671.6,311.8L672.8,311.7L674.1,312.8L674.2,312L675.6,311.5L676,311L676.2,309.6L676,307.9L676.8,306.4L677.1,305.1L677.7,304.8L678.7,305.1L680,303.7L680.6,301L682.4,300.1L683.6,298.2L682.6,295L682.9,294.1L685.1,293.5L686.1,293.7L687.5,294.5L690.7,292L692.2,291.5L693.5,291.6L693.2,290.4L693.7,289.3L692.2,289.1L692.7,287.7L692.5,286.9L691.3,285.7L692.5,284.3L693.7,283.2L694.9,284.1L696.4,284.6L697.9,283.9L698.5,283.2L699.2,283.6L699.4,284.6L700.9,284.9L701.7,285.5L702.2,286.6L703.3,287.9L703.9,289.8L706.5,290.3L708,289.7L710.2,290.2L710.6,290.9L711.7,291.4L712,292.2L713.9,292.7L714.6,291.3L716.2,290.6L717.2,291.1L719,291.3L720.6,292.4L721.3,291.7L723,291.5L723.4,290.4L724.4,289.7L724.7,289L725.6,288.8L727,287.9L728.4,291.7L729.2,292.1L730.5,292L732.8,293.7L733.2,294.8L733.4,296.5L734,297.1L734.1,298.3L733.5,299L733.7,300.5L733.2,300.7L733.8,301.7L735.1,302.6L735.9,304.1L736.9,304.4L736.4,305.6L737,306.3L738,306.6L738.1,307.4L739.7,308.6L740.9,311.1L741.9,311.1L742.6,311.9L744,312.4L744.4,313.1L747.1,313.2L741.2,320.4L739.6,321.1L737.9,322.3L735.2,324.6L735.4,326.3L734.4,327.3L733,328.2L733.3,329.3L733.1,330.3L731.6,331.2L729.8,331.5L728.9,333.3L729,334.2L727.9,334.4L726,335.3L724.1,336.6L722.1,336.9L720.2,338.2L719.8,338.7L719.6,339.2L714.2,339.7L704.2,340.8L698.9,341.2L695.6,341.3L692.5,341.5L687.3,342.3L681.1,342.8L677.5,343L672,343.2L668.9,343.4L667.9,343.9L667.4,343.6L658,344.7L652.4,345.2L644.8,346.1L644.8,345.4L640.8,345.4L641.7,348.5L641.4,349.5L627.4,350.5L619,351L616.9,351.3L617.4,348.6L618.3,348.2L619.6,349.6L620.2,349.5L620.6,348.1L621.2,347.2L620.4,346.1L620.9,345.1L621.8,344.7L620.7,344L621.3,343L621.8,340.3L621.2,339.9ZM615.6,351.5L614.7,351.5L614,350.3L614.4,349.7L615.6,349.8L615.9,350.6L615.6,351.5Z" },
  "22": { name: "Louisiana", bounds: [535, 433.1, 639, 523.6], path: "M637.5,497.4L638.5,498.6L639,500L638.9,502.5L638.2,504L638.7,501.1L638.5,499.4L637.5,497.4ZM628.5,497.9L631.3,495.4L630.7,496.9L631.8,498L630.8,499.1L630.5,498.2L628.6,498.3L628.5,497.9ZM623.7,510.2L624.9,509.9L624.3,510.8L623.7,510.2ZM609.5,520.8L610.2,520.3L611,521.4L610.4,521.7L609.5,520.8ZM606,521.3L608.7,521.8L607.4,522L606,521.3ZM602.2,522.4L603.9,521.9L604.1,522.2L602.3,522.7L602.2,522.4ZM576.5,511.5L578.3,510.5L579.9,510.5L582.6,512L581.6,512.8L581.6,513.5L580,513.9L576.3,511.9L576.5,511.5ZM535,434.7L547.6,434.4L569.4,433.9L574.5,433.7L589.4,433.1L588.6,434.8L589.8,435.4L590.1,434.8L590,433.6L590.9,433.6L591.3,435.6L590,436.7L589.7,437.4L589.8,439L591.8,439.3L591.4,440.1L590.1,441.4L590.8,442.6L592.1,442L592.5,441.1L592.9,441.6L591.5,443.2L593.4,444.5L593.2,444.8L591.2,443.9L590.9,444.9L592.6,446L593.3,445.5L593.9,446.2L593.4,446.6L593.6,447.8L595.4,448.2L594.6,449.1L593.8,449L594,450L593.6,450.9L593,450.4L590.4,451.5L590.5,452.9L592.6,453L592.5,451.8L593.4,452.2L592.9,453.6L591.8,454.8L591.2,454.2L590.6,454.6L592.3,455.5L590.2,456.9L590.4,457.8L588.8,459.4L587.4,459.5L587,461.4L589,461.4L588.7,461.9L587.2,462L586.4,462.8L586.5,464.8L585.9,465.1L584.6,464.3L584.2,465.1L584.9,465.7L586.1,465.4L586.4,466L585.6,466.7L584.4,467L584.5,468.9L585.4,470L585.3,470.7L584.5,470.6L583.9,469.2L583.3,470L584.8,471.9L584.6,472.8L583.5,473.2L582.2,473.1L582.2,473.8L583.3,475.1L582.7,476.1L583.9,477.5L584,478.2L582.6,479.2L593.8,478.6L605.8,477.9L619.1,477.1L619.6,477.2L619.1,478.4L618.4,481.9L617.9,482.5L618,483.5L617.6,484.9L618.3,485.5L618.8,487.2L619.7,488.3L621.2,489.5L621.3,490.5L622.4,492L622.3,493.1L622.9,494.5L623.9,495.5L624.8,495.4L623.6,496.2L623,496.1L621.9,497.3L621.8,498L621,498.4L621.2,499.1L619.2,498.9L618.5,499.8L619,501.1L620.2,501.3L621.1,500.7L620.9,501.9L621.9,502.7L623.8,502.3L624.1,500.5L623.9,499.7L625.6,498.5L625.7,497.6L627.9,498.5L626.8,499.2L626.9,499.9L627.9,500.1L628.2,501.3L629.2,501L630,499.3L631.1,499.7L630.9,500.8L629.9,500.9L629.2,501.8L630.8,501.6L630.5,502.2L628,503L629.4,504L630.2,503.5L629.7,504.7L628.1,504.1L627.3,505.2L627.3,507.2L626.7,507.3L626.2,505.7L625.4,505.7L625.4,507.5L622.8,507.8L624.1,508.4L624.1,509.1L622.5,508.2L623.4,509.3L622.5,509.6L623.5,510.9L624.9,511L625.8,511.9L626.3,513.4L628.8,513.1L630.1,513.7L630.2,513.1L631.7,514.7L632.4,513.8L634.3,515.8L634.8,517.2L636.1,516.6L636.6,517.3L634.9,517.8L634.8,518.4L636,518.4L635.5,519.4L634.7,519L634,520.4L634.2,521.8L632.6,521.2L632.6,520.5L631.8,519.9L629.8,522.7L628.8,523.6L630.1,520.7L630.7,520.2L630.6,519.2L631.2,518.7L631.1,517.7L630.3,517.3L629.8,519L628.6,519.1L627.1,517.2L624.6,516.6L623.8,515.7L619.8,515.3L619,515.7L615.7,518.7L612.6,521.1L612.3,520.1L611.4,519.9L611.7,519L610.8,517.1L609.8,516.3L608.8,518L608.9,516.5L608.1,515.4L607.3,516.7L606.3,516.5L605.8,517L604.9,516.6L605.1,517.7L604.3,518.7L604.1,519.7L603.5,519.6L603.2,520.7L602.6,520.5L601.2,521.5L601,522.8L599.9,522.5L600,521.6L597.9,519.8L597.1,520.1L595.2,519.8L594.5,519.2L593.1,519.1L591.5,518.6L590.3,517.5L591.2,517.2L591.6,516L593.1,517.2L593.5,516.7L593.6,518.1L594.6,518.3L594.3,516.3L592.5,515.2L592.5,514.3L591.7,514.3L591.2,515.1L590.2,515.4L590.3,514.6L589.6,514.7L590.4,513.4L589.6,512.7L587.7,513.7L586.9,512.2L586.2,512.4L585.7,510.1L583.8,510.2L584.2,509.5L584.2,507.9L581.9,507.6L579.7,508.7L579.1,508.6L579.1,507.6L579.6,506.8L580.1,507.1L580,505.9L578.8,505.8L577.9,506.3L577.2,505.9L577.1,506.7L574.5,508.2L574.1,507.6L572.8,507.9L573.5,509.1L574.8,509.2L574.1,509.8L574.8,511L576.2,510.6L575.6,511.2L576.1,511.6L573.8,511.8L572,512.8L570.6,513.1L564.8,512.1L562.3,511.3L558.1,509.5L556.5,508.9L553.6,508.2L551.2,508.2L550.2,508.5L547.7,508.4L542.5,509.3L540.6,510.4L538.9,507.5L540.2,506.4L541.5,503.5L543.1,502.1L542.5,501.3L543.3,500.1L542.6,498.5L542.7,496.6L541.7,495.7L541.8,494.5L543,493.3L542.6,491.5L542.1,491L542.3,490.3L543.2,489.6L543.1,488.7L544.3,487.5L544.3,486.4L545.5,484.5L545.2,483L546,481.8L545.2,480.5L546.1,479.9L545.5,478.6L545.4,476.2L544.4,476.5L544,474.4L542.7,473.5L543.1,472.3L542.4,470.6L541.4,469.9L541.8,469.1L540,468L539.6,467L540.2,465L539.7,463.6L539.8,463L538.8,461.9L538.1,460.3L536.8,459.6L536,458.1L535.5,457.9L535,434.7Z" },
  "23": { name: "Maine", bounds: [890.9, 45.8, 957.1, 150.1], path: "M939.8,114.8L940.6,114.4L940.3,115.2L939.8,114.8ZM938,116.1L937.9,114.5L939.8,115.7L939.2,116.8L938,116.1ZM936.3,112.2L936.5,111.3L937.3,112.6L936.3,112.2ZM932.2,116L932.9,115.8L933.3,116.5L932.2,116ZM933.5,124.7L933.8,123.9L934.2,125.3L933.5,124.7ZM931.4,119.2L931.6,118.3L932.7,117.1L933.2,118.1L934.3,119.4L934,120.3L933,120.8L932.2,120.6L931.9,119.1L931.4,119.2ZM930.1,116.3L930.5,114.8L930.3,113.2L931,113.3L931,116.2L930.1,116.3ZM910.2,150.1L907.8,149.2L907.5,147.2L904.5,145.2L903.6,143.5L903.3,140.4L902.9,140.1L901.3,135.2L897.7,123.3L894.8,114.3L890.9,102.4L892,101.8L891.8,101.2L893.4,101.6L894.1,103L894.8,103.1L895.1,101.3L894.9,99.9L894.3,99.3L895.2,98.3L896.1,99L897.3,98.8L896.8,97.6L895.4,96.9L895.2,96.3L895.8,94L896.9,92.3L899.1,90.1L898.2,88.9L899,87.3L900,86.1L900,84.9L898.7,84.8L899,84L898.4,83.6L898.7,82.7L898.2,82.6L898.8,80.5L897.7,79.7L897.9,77.9L898.4,77L898.1,76.3L898.9,75.5L899.3,74.1L899.9,73.8L899.1,67.5L905.9,47.6L908.3,47.8L908.8,47.5L909.5,50.4L910,51.5L912.5,52.3L914.8,50.1L915.7,50L916.5,49.2L916.6,48.5L917.4,48.1L919.6,47.6L919.2,46.4L919.7,45.9L922.6,45.8L923.1,46.4L926.5,47.7L928.2,49.4L929.7,49.7L932.8,59.9L935,66.8L937.3,74L937.9,74.4L937.3,75.4L938.5,76.5L937.9,77.2L938.7,79.9L940.1,79.8L940.1,79.4L941.5,80.6L943.9,80.4L944.6,79.9L945.7,81.9L944.5,82.6L945.4,83.8L946.3,84.3L946.6,85.5L946.1,87L947.2,88L948.2,89.3L949.5,89.7L950,89L949.8,88.1L951,88.3L952,88.1L953.6,89.7L955.3,92.2L956.3,92.6L957.1,94.8L955,99.4L953.8,100.3L952.8,98.6L951.5,99.6L952.4,100.5L952,101.5L951.4,101.5L951,102.8L949.6,103.1L950,103.7L951.1,104.1L950.2,105.6L949.2,105L948.5,104L947.5,105.2L946.8,104.3L946.7,105.5L946.3,106L946.3,107.5L945.3,107.5L944.5,108.8L944,108.4L943.8,110.3L942.8,110L942.5,109.2L941.4,109.7L941.9,110.9L941.5,112.5L942.2,113L940.4,113.9L938.9,113.7L937.4,111.9L937.6,111.3L938.7,110.4L938.1,109.7L937.7,110.6L937.3,109.7L935.4,111.3L936,112.1L935.9,113L937,114L937.1,114.9L936.3,116.8L936.3,117.6L937.2,118.5L937.3,119.8L936.5,120.3L935.9,118.7L935.7,117.6L934.5,117L933.9,115.9L934.5,114.7L933.2,114.2L932.8,113.6L931.9,114.3L931.4,112.2L931.7,111.2L931,110.1L930.3,112L929.5,111.6L928.5,112.6L929.7,113.9L929.8,114.9L929.3,115.5L929.1,117L929.3,118.4L928.9,118.7L929.3,120.5L930.2,120.3L929.6,121.1L930.4,121.8L930.2,122.9L928.6,123.2L928.3,124.8L927.5,125L927.7,126.2L927.1,126.5L927,124.7L926.4,124.6L925.8,125.7L925.7,124.4L924.8,124.8L925.1,125.8L924.4,126.7L924.4,127.8L923.5,127L923.6,127.9L922.9,128.7L922.1,128.4L922.3,129.7L921.4,128.9L921,130.9L919.7,132.2L919,130.7L918.1,130.9L917.3,132.8L916.6,132.7L916.1,134L915.1,134.1L914.6,135.3L915.1,136.8L914.8,137.5L914,137.2L912.8,138.3L912.6,139.2L913.3,140.3L912.6,141.7L912.9,142.3L911.2,143.3L910.8,145.5L911.2,146L911,148.1L910.6,149.8L910.2,150.1Z" },
  "24": { name: "Maryland", bounds: [782.3, 244.6, 863.7, 285.3], path: "M849.9,285L848.9,285.2L848.6,283.4L849.7,283.4L849.9,285ZM847.3,281.5L847.1,280L847.7,279.6L849,282.2L847.3,281.5ZM782.3,256.9L798.2,254L816.4,250.5L824.5,248.9L837.3,246.2L844.9,244.6L845.8,248.4L852.6,272.5L857.8,271.6L863.7,270.3L863.7,273.2L863.5,273.6L863,278.8L862.5,280.5L856.1,282.7L855.5,283.8L854.6,283.4L853.4,283.8L852.3,285.3L851.6,285.3L851.4,284.2L851.6,282.7L852.5,281.9L851.2,281.8L851.9,280.3L850.6,280.4L849.9,281.2L849.6,279.5L851.2,278.7L849.7,277.8L850.2,275.4L849.4,276L848.9,278.3L847.9,277.2L848.6,276.6L847.7,275.6L847.2,277.3L847.7,277.8L847.6,278.7L847,278.6L846.1,279.2L845.5,279.1L844,277.6L841.4,274.1L842.6,273.6L841.8,272.3L841.8,271.3L842.5,270.7L843,271.1L843.6,270.5L843.8,271.1L845.2,271L846.4,271.3L845.1,270.3L844,270.2L842.9,269.7L841.6,268.4L841.5,269L840.6,268.8L840.7,269.9L840.3,269.8L840.1,267.8L840.8,265.9L841.9,266.5L842.3,266.1L841.6,263.9L841,263.7L840.2,264.8L839.4,264.9L839.7,265.8L839,266.3L838.8,264.2L839.4,261.7L840.1,262.9L841.4,262.9L841.9,262.2L841.4,261.2L841.8,260L840.9,260.4L841.1,262.1L840.5,261.8L840.3,260.3L839.3,259.3L839.8,256.5L840.2,254.7L841.1,253.6L842.9,253.3L842.3,253L843,251.4L842.4,251.4L842.6,248.9L840.5,249.9L840.4,250.9L841.6,251.7L840.9,252.2L839.2,254.5L838.7,254L838.9,252.8L838.3,252.4L838.1,254.3L838.8,254.9L838.5,255.8L837.7,254.1L836.8,254L837.6,255.7L836.9,256.7L837.6,257L836.3,258.8L835.2,258.7L835.1,258.2L833.5,257.8L834.7,259.2L836.8,260.1L837,261.9L838,262.7L836.8,263.9L837.3,265.3L836.7,265.3L836.5,266.5L837.1,266.9L836.2,268.8L837,269.6L837.1,270.7L837.8,272L838.1,274L838.7,274.9L841,276.7L840.7,278.2L839.9,278.3L840.3,279L841.1,278.4L841.6,278.7L841.4,279.6L841.8,280.5L843.3,282L843.1,282.5L843.8,284.2L841.7,283.1L841.2,281.9L840.7,282.2L840.8,283.3L839.7,282.9L839.1,281.8L838.3,281.3L836.8,281.1L834.6,281.5L834.3,280.6L833,279L833.8,281.3L832.2,280.7L831,279.7L829.9,277.6L827,280.2L826.1,279.8L825.3,277.7L825.6,276L827.1,273.8L826.8,272.9L828.2,271.6L827.9,269.9L829.7,267.2L827,265.3L825.9,267L825.3,266.4L823.4,266.3L823.4,265.5L821.5,264.9L819.4,265L818.2,264.2L818.2,262.7L818.7,261.5L817.3,261L816.6,260.2L815.8,260.4L813.9,260.3L813.2,260.2L812.9,258.1L812.3,257.3L810.6,256.4L810.1,255.4L810.9,255.1L810.8,254.4L808.8,254.4L807.7,255L805.7,253.5L804.5,253.4L803.3,255.4L801.8,255.2L801.2,256.5L800.4,256.6L800.8,257.3L800.4,258.3L798.6,258.6L797,258.6L794.7,257.4L795.4,257L794.2,256.7L794.3,257.4L792.3,261.6L790.8,261.2L789.7,261.4L789.2,262.9L787.6,264.4L787.1,265.8L786.7,265.8L785.6,266.9L784.9,268.1L784.1,268.5L782.3,256.9Z" },
  "25": { name: "Massachusetts", bounds: [870.6, 154.8, 933, 189.2], path: "M927.7,186.8L928.5,187L930.2,186.4L931.2,185.8L931.5,184.3L933,186L932.4,187.2L930.7,187.6L928.1,187.2L927.7,186.8ZM918.3,188.3L919.4,188L920,186L921.3,184.4L922,184.6L922.6,185.7L923.8,186L924.2,185.1L924.6,186.7L920.4,188L919.6,189.2L918.3,188.3ZM871,167.6L884.1,164.8L891.8,163.2L902.9,160.7L903.4,159.4L904.5,159.3L904.1,158.1L904.8,157.2L906,157.3L906.2,156L907.7,154.9L909.1,155.1L909.5,154.8L911.2,158.5L912.9,159L913.3,158L914.3,158.4L913.8,160.4L913.4,160.3L911.3,161.8L910.6,162.2L911.2,162.6L910.7,164.1L910,164.6L909.5,165.8L910.4,166.9L909.6,167.1L910,168.6L910.9,168.6L911,167.8L911.8,167.4L912.6,168.2L914,168.3L915,169L915.4,169.8L917,171.2L917.1,173L916.4,173.3L917.5,174.2L919.4,174.4L920.3,175.8L920.3,176.8L921.7,177.7L923.4,177.8L924.8,177.5L925.5,177.8L926.4,176.6L928.8,175.1L929,174.6L927.8,172L927.3,172.8L926.7,171L926.2,170L925.1,169.6L924.5,170.3L923.6,170L924.3,169.4L926.7,169.7L928.4,171.4L930.1,174.2L931,176.8L930.9,178.5L930.6,179.8L930.4,177.8L929.7,177.6L927,179L926.2,179.6L924.7,179.9L923.3,181L922.7,182.4L920.5,183.3L918.5,186.1L916.1,187.6L916.3,187L918.2,185.8L920,183.3L920.1,182.4L919.1,180.3L919.6,179.8L917.9,179.4L918.2,180.5L917.5,180.4L917.7,181.7L916.9,181.5L917.1,182.2L915.4,182.8L915.4,185.3L914.1,186.1L912.8,186.4L911.6,182.9L910.5,182.8L909.8,182.1L909,181.4L907.7,181L906.9,178.5L906.2,178.8L905.5,176L898.8,178L898.7,177.7L883.1,181.4L883.1,182.1L882.3,182.5L882.2,181.6L879,182.3L871.2,184L870.6,183.2L871,167.6Z" },
  "26": { name: "Michigan", bounds: [585.3, 84.4, 721.5, 227.6], path: "M677.1,130.8L677.8,130.8L678.2,131.6L682,132.3L681.1,133.6L679.8,133.4L677.1,130.8ZM663.5,133.2L664.7,133.8L664.6,134.5L663.4,133.9L663.5,133.2ZM662.4,138.6L662.6,136.6L663,135.9L663,134.8L664,134.8L664.5,138.1L663.5,139L662.4,138.6ZM660.9,135.6L661.7,135.3L661.5,136.4L660.9,135.6ZM658.8,142.5L659.5,142.8L659.7,143.9L658.8,142.5ZM656.6,149.6L656.9,149.2L658,149.5L658.2,151.3L657.6,151.3L656.7,150.4L656.6,149.6ZM655.4,152.7L656,151.8L656.6,152.1L655.8,153L655.4,152.7ZM645.5,139.9L646.8,141L646.4,141.5L645.5,139.9ZM651.9,227.6L653.6,226L655.1,224.2L656.8,218.8L658.6,215.5L659.3,213.1L659.8,210.2L660,204.7L659.4,200.2L658.9,198L657.8,195.4L655.5,191.5L653.7,187.1L652.9,185.8L652.4,184.3L652.5,183.5L653.5,181.8L653.8,180.1L652.9,176.8L651.9,174.9L653.1,173.3L654.2,170.3L655.2,168L655.3,166.2L655.2,164.8L655.5,162.9L654.7,161.1L654.9,159.7L657.1,158.7L657.3,158L657.1,154.9L658.5,154.8L659.1,153.3L660.2,153.9L661.1,153.5L661.9,151.1L662.8,150.1L663.6,147.8L664.8,147.2L665,147.9L663.8,149.2L664.7,150.6L663.6,152.7L664.3,152.2L664.5,153.7L664.1,153.8L663.9,155.9L664.5,157.3L665,157.2L665.7,154.4L665.1,154.3L665.7,152.5L666.3,152L666.2,155.3L665.4,156.2L665.3,157.4L666.1,157.6L667.8,153.2L667.7,149L667.1,146.3L667.3,145.5L669.6,143.3L670.6,142.8L672.4,142.8L674.2,141.9L674,141.3L672.1,141.2L671.2,140.3L670.5,138.3L671,136.9L671.9,136.3L672.9,134.4L671.7,133.8L675.1,133.7L675.4,132.7L679,134.3L680.6,135.2L681.4,134.7L682.7,134.7L684.6,135.1L686.1,136.6L686.6,137.8L689.8,137.9L691.6,139.2L693,139.1L695.1,140.2L696.7,139.9L698.8,141.7L698.4,142.3L699.5,144L700.2,144.7L701.3,147L699.1,146.2L698.4,147.2L698.8,147.7L698.8,148.9L699.7,149.9L700.9,150.3L701.4,151.4L701.7,153.3L702.2,153.9L701.9,156.7L702.2,157.9L702.4,162.5L701.9,162.7L701.1,164.2L699.8,164.4L699.2,165.5L699.2,169.4L697.7,170.1L697.8,171L695.4,171.5L694.4,173.2L694.4,176.5L694.1,177.1L695.1,178.8L696.1,179.3L696.5,178.6L696.9,179.3L698.1,179.5L699,180.2L699.5,179.8L700.9,177.2L702,176.6L701.5,175.7L702.1,173L702.5,173.9L703.7,172.6L702.4,172.1L703.9,172L704.6,170.6L705.9,170.2L708,169.2L708.2,168.5L709.9,167.7L712,168.5L713,169.1L714.3,171.3L715.2,172.4L715.8,174.4L716.5,177.5L718,181.1L718.9,185.8L719.9,188.5L721.5,191.2L721,192.4L721,195.2L721.3,196.2L720.9,199.8L719.8,201.3L719.2,201.3L718.5,202.2L718.4,200.9L717.8,200.5L719.1,198.7L717.8,198.4L716.3,199.4L716,200.3L716.8,201.4L715.9,201.4L715.4,202.5L715.7,204.1L715.1,206.5L712.9,207.6L712.1,209.5L712.5,212.9L711.7,213.6L711.8,214.9L710.7,216.6L709.8,217.1L709.7,218.1L709,218.4L708.3,220.4L708.7,221.5L708.3,221.7L693.2,224.2L685.8,225.4L685.6,223.9L669.2,225.8L651.9,227.6ZM601.4,92.4L602.5,91L607.5,87.9L607.9,87.9L610.1,85.8L611.7,84.9L612.1,85.1L613.6,84.4L613.2,85L611.4,86.9L611.4,87.5L610.1,88.7L606.7,90.3L605.2,91.4L606.6,91.7L603.5,93.3L602.5,93.3L601.4,92.4ZM585.3,123.1L589.2,121L591.3,120.2L592.9,118.6L593.9,117.3L594.8,116.8L596.5,116.3L597.4,116.6L599,115.9L600.5,115.8L603,114.3L604.9,112.1L606.9,111.9L607.8,110.8L608.3,109.4L610.1,108L611.7,106.3L612.9,105.8L614,104.6L615.1,102.8L618.6,100.5L621.7,99.8L624.4,99.7L625.8,100.3L625.9,101.1L624.4,101.7L622.2,101.8L622.5,102.8L620.8,104L619.3,105.9L618.6,106.1L618.4,107.6L617.5,108L617.5,108.8L616.6,109.5L616.5,110.6L615.4,111.8L615,115L615.6,116.6L616.6,114.8L618.6,112.5L620.1,111.5L620,112L618.7,113.5L618.2,114.7L619.7,113L621.1,112.5L622.6,112.7L624,112.5L626.5,113.3L626.7,114L628.3,114.3L628.9,114.9L629.2,116.1L630.3,117L630.6,117.9L631.7,118.8L632.6,118.9L633.1,120.8L634.8,121.1L637.1,120.7L638.5,119.7L639.1,119.8L639.7,121L640.7,121.6L641.8,121.6L642.2,120.6L643,120.6L643.6,121.4L643.7,120L643.2,119L644.1,118.6L644.5,119.1L644.3,120.2L645.3,120.6L647,118.5L648.8,117.7L651.8,115.2L652.5,115.6L655.8,114.4L657.1,114.5L660.4,114.3L662,114L665.3,111.9L666.6,111.5L668.3,111.5L670,111L669,112.8L669.1,115L669.4,116.2L669,116.7L669.8,117.6L671,117.3L673.2,118L675,116.8L675.7,116.8L676.5,118.3L678.5,117.5L679,116.1L681.5,115.7L681.9,115L683.4,114.8L683.8,115.4L683.5,117.4L684.2,119.7L684.4,121.5L682.8,121.7L682.5,123L684.5,122.7L684.9,123.3L686.1,123.6L685.5,124.6L687,125.7L687.7,125.7L689,126.3L689.3,125.6L690.2,126.2L690.3,124.9L689.4,123.8L690.2,124L692.3,123.4L693.2,123.6L694.2,125.3L695.2,125.8L694.8,127.1L694,127.6L692.4,127L690.7,127.6L688.9,127L686.8,127.5L685.2,127.2L681.9,128.1L681.2,128.8L679.4,127.7L678.7,128.2L678,126.9L677.3,127.1L676.5,126.6L676,127.2L676.3,128.4L675.5,129.1L676.3,131.2L675.7,131.6L674.2,131L674,130.4L672.7,129.8L671.2,128.3L668.7,127.5L668,127.7L665.8,126.9L665.1,127.2L662.9,127.3L661.7,128.8L660.9,130.3L660.4,130.5L658.6,130.3L657.3,130.7L657,131.8L654.9,131.1L652.6,131.3L651.3,131.9L650.7,132.8L650.3,135.5L649.5,135.5L649.3,136.1L648.1,136.6L647.7,137.6L647,137.7L647.1,138.6L646.5,138.8L646.8,140L645.2,139.2L645,138.4L645.8,137.9L646.2,136.1L646.9,136.1L647.6,134.3L647.3,133.5L646.6,133.4L645.8,134.9L643.6,134.5L643.8,135.6L643.2,136.6L643,137.7L641.4,138.5L640.7,138.3L640.5,136L639.9,135.4L639.4,136L639.6,138.4L637.9,139.6L636.7,142.2L635.8,144.7L635.9,145.1L635,146.5L634,148.8L632,152.2L632.4,153L631.2,152.8L629.9,151.5L630.4,148.6L631,147.6L630.2,146.5L629.3,147.5L628,147.6L627.3,147L627.4,145.7L628.1,145L628.4,144L627.7,142.6L628.2,142.7L628.4,141.7L627.6,140.9L628.2,140.2L627.7,139.4L626.1,138.4L625.2,138.5L624.6,137.7L623.1,138.1L622.3,137.4L623.2,136.3L622.7,135L620.3,134.3L619.6,134.6L618.2,133.8L617.7,134.2L616.1,133.4L614.6,133.5L614.5,134.2L612.5,133.4L611.9,133.8L610.7,133.3L606.7,131.4L590.3,128L589.4,125.7L588.3,124.2L586.9,124L586.7,123.3L585.8,123.8L585.3,123.1Z" },
  "27": { name: "Minnesota", bounds: [479.3, 62.2, 597.6, 195.3], path: "M479.5,70.7L491.9,70.8L507.5,70.8L510.8,70.8L510.7,62.2L512.1,62.8L513.7,62.5L515.2,63.5L515.6,64.1L516.5,68L516.8,68.5L517.9,73.3L517.6,74.5L517.8,75.7L518.6,76.5L520.2,77.3L521.7,77.5L522,77.1L524.3,77.3L524.9,78.4L528.2,78.5L530.7,78.8L531.3,80.1L531.5,81.3L533.8,81.2L536.5,80.5L536.5,79.5L538.1,79L538.2,78.6L540.3,78.2L540.8,78.6L543.7,78.5L547.7,80.3L549.1,80.2L549.1,81.1L548.2,81.3L548,82L548.9,82.6L551.1,82.2L551.9,83.3L551.8,84.4L553.4,87.3L554.9,86.6L554.3,85.1L554.9,84.2L555.8,84.4L558.1,84L558.9,84.8L558.9,86L559.7,86.7L560.6,86.6L561.1,87.2L563.4,87.3L563.3,88L564.6,89.6L565.9,89.3L565.8,90.7L567,90.1L567.9,90.5L568.8,90L570.6,89.6L572.3,88L574.6,86.3L576,85.7L576.7,85.8L576.8,86.9L577.7,87.4L577.5,88L578.1,88.9L579.9,88.6L580.8,88.1L581.2,88.7L587.6,88L589.3,88.5L590.3,90L591.8,90.6L592.5,89.9L593.6,89.6L594.4,89.9L596.2,90L597.6,89.5L596.2,90.7L594.5,91.4L593.1,92.6L591.2,93.4L590.4,94.2L586.3,95.7L585.1,96.4L583.5,96.8L582,97.5L579,99.5L577.1,101.1L574.8,103.3L572.7,105.7L572.4,106.3L569.9,109.4L568.2,111.3L566.7,112.2L565.4,114L564.8,114.2L563.3,115.9L562.1,116.6L558.9,119.4L560.2,121.1L559,120.2L557.5,121L557.4,122.4L555.9,122.3L556.4,135.6L555.9,135.8L555.6,136.9L554.2,136.9L553.7,138L552.9,137.8L552.5,138.5L551.1,139L550.1,139.9L549.2,141.5L548.9,142.9L547.6,144L547.4,145.8L547.5,147.3L549.3,147.4L551.3,149.9L551.4,151.1L550.6,152.6L549.7,153.6L549.7,155.9L550.1,157.8L549.4,158.4L549.8,159.6L550.1,161.7L549.8,162.7L550,163.9L549.3,165.9L550.5,166.7L553.3,169.1L553.6,169.9L556.9,170.1L557.5,170.5L558,171.8L559.2,172.7L561.8,173.4L563.9,174.9L564.9,177.8L565.8,178.6L567.6,179.6L569.8,181.6L572.3,182.2L574.9,185.5L575.6,187.1L575.3,188.6L575.4,190.7L576,191.4L575.8,192.2L576.3,193.3L567.8,193.7L549.3,194.4L534.1,194.9L515.8,195.2L502.3,195.3L490.6,195.2L490.8,167.9L490.8,154.3L490.2,153L488.2,151.8L487.1,151.7L486.4,150.7L485.9,149.4L484.4,147.3L484.8,146.3L487.7,144.1L488.8,142.5L489.1,139.9L489,137.6L489.3,136.5L488.7,133.4L488.6,130.9L487.5,129.9L486.5,127.6L486.4,125.6L485.5,123.3L485.9,121.9L485.5,119.8L485.9,118.1L485.3,116.5L485.3,112.2L485,111.2L485.1,108.2L484.7,106.4L484.9,102.5L483,97.6L482.4,95L481.8,94L481.6,92L481.2,91.6L480.5,89.4L481,86.9L480.6,85.1L480.8,82.8L480.5,80.8L481.2,79L481.4,77.7L480.8,76.8L480.3,74L479.3,71.4L479.5,70.7Z" },
  "28": { name: "Mississippi", bounds: [582.2, 384, 646.5, 495.5], path: "M644.5,493.1L646.5,492.9L645.6,493.7L644.5,493.1ZM639.3,492.9L640.4,492.5L643,493.2L641.3,493.2L639.3,492.9ZM635.2,493.9L637,493.5L635.5,494.2L635.2,493.9ZM631.8,493.6L633.2,493.5L632.8,494.3L631.8,493.6ZM589.4,433.1L590.1,431.7L588.6,430.7L588.9,430L590.4,430.1L590.7,429.8L590.5,428.1L591.4,426.9L590.9,426.5L590.4,427.7L589.5,426.3L589.5,425.1L590.9,423.3L590.4,422.8L589.9,424.2L588.9,424.5L588.2,423.7L589.5,423.3L589.6,422.4L588.9,421.8L588.8,422.9L587.6,423.2L588.5,421.8L587.6,420.4L589.3,419.6L589.2,418.9L587.4,417.8L588.7,417L590,418.1L591.1,417.7L590.4,416.7L589.5,417L588.9,416.6L588.9,415.5L591.8,415.1L590.8,414.5L590.2,413.3L591.2,411.9L589.9,411.3L589.7,410.8L591,410.1L591.4,411L592.1,410.6L591.5,409.7L593.4,409.4L593.6,408.2L592.1,407.6L592,407L592.8,406.3L594.2,406.9L594.5,405.8L593.2,405.9L592.3,405.2L592.8,404.5L593.9,405.3L594.1,403.9L595.4,403.6L595.8,402.9L595.3,401.6L596.8,401.5L596.6,402.5L597.3,402.4L597.2,401.3L598.6,400.4L598.9,399.8L598.3,398.7L599.1,397.5L598.2,395.7L598.1,394.5L598.8,394L598.9,395.3L599.7,395.2L600.4,394.3L600.2,393.7L598.9,393.7L598.4,393L599.3,391.4L599.4,393L600.2,393.1L600.5,392.4L600.3,390.8L599.8,389.5L600.6,389.4L600.9,390.5L602.4,389.9L604,388.7L604,387.7L602.8,386.7L618.9,385.7L630.2,384.9L641.6,384L642.6,385.6L643.7,386.2L643.4,396.1L643,413.2L642.5,443.9L642.2,455L642.7,459.5L645.1,478.3L646.5,489.5L644.4,490.8L643.8,490.3L642.9,490.7L642.5,490.1L641.2,490.1L639.6,490.5L638.3,489.8L638.2,490.3L636.2,489.7L633.1,490.6L629.1,492.3L629.3,491.2L628.5,490.7L627.6,491.3L628.4,492.4L626.7,493.6L626.2,495.2L624.8,495.4L623.9,495.5L622.9,494.5L622.3,493.1L622.4,492L621.3,490.5L621.2,489.5L619.7,488.3L618.8,487.2L618.3,485.5L617.6,484.9L618,483.5L617.9,482.5L618.4,481.9L619.1,478.4L619.6,477.2L619.1,477.1L605.8,477.9L593.8,478.6L582.6,479.2L584,478.2L583.9,477.5L582.7,476.1L583.3,475.1L582.2,473.8L582.2,473.1L583.5,473.2L584.6,472.8L584.8,471.9L583.3,470L583.9,469.2L584.5,470.6L585.3,470.7L585.4,470L584.5,468.9L584.4,467L585.6,466.7L586.4,466L586.1,465.4L584.9,465.7L584.2,465.1L584.6,464.3L585.9,465.1L586.5,464.8L586.4,462.8L587.2,462L588.7,461.9L589,461.4L587,461.4L587.4,459.5L588.8,459.4L590.4,457.8L590.2,456.9L592.3,455.5L590.6,454.6L591.2,454.2L591.8,454.8L592.9,453.6L593.4,452.2L592.5,451.8L592.6,453L590.5,452.9L590.4,451.5L593,450.4L593.6,450.9L594,450L593.8,449L594.6,449.1L595.4,448.2L593.6,447.8L593.4,446.6L593.9,446.2L593.3,445.5L592.6,446L590.9,444.9L591.2,443.9L593.2,444.8L593.4,444.5L591.5,443.2L592.9,441.6L592.5,441.1L592.1,442L590.8,442.6L590.1,441.4L591.4,440.1L591.8,439.3L589.8,439L589.7,437.4L590,436.7L591.3,435.6L590.9,433.6L590,433.6L590.1,434.8L589.8,435.4L588.6,434.8L589.4,433.1Z" },
  "29": { name: "Missouri", bounds: [502, 259.6, 621.8, 364], path: "M502,261.9L521.4,262L530.6,261.8L539.9,261.4L544.8,261.3L553.4,260.8L564.7,260.1L570.9,259.6L571.8,260.9L572.8,261.1L573,262L573.9,262.9L574.5,262.9L574.6,264.1L575.4,264.6L576.5,264.7L575.8,265.6L575.1,268L575.2,270.5L575.5,272.6L577,275L576.5,276.2L576.9,277.1L578.1,278L578.1,279.5L580.4,281.7L581.4,282.2L582.1,283.5L582.9,283.6L584.1,285.6L587.7,287.9L589.7,289.9L590.7,293.5L590.2,294.4L590.9,295.6L591.3,297.3L592.7,298.5L593.4,298.3L594.9,296.1L597.5,296.9L598.5,297L601,298.4L600.9,299.6L599.4,301.4L600.1,303.2L600,304.2L598.9,305.9L598.4,308.3L597.6,309.3L597.2,311.7L597.6,313.2L599.1,314.4L599.7,315.4L601,316.3L601.8,316.4L602.6,317.5L603.1,317.4L604.3,318.6L605.6,318.5L604.8,319.5L605.2,320.3L606.1,320.6L607.1,319.7L608.3,320.8L609,320.9L610.5,322.2L610.4,322.8L611.3,323L612,323.8L613.3,324.3L613.3,325.5L614.1,326.4L613.3,326.7L613.5,327.8L615,329.9L615.4,331L615.2,332L614.3,332.4L613.8,333.4L614.9,334.2L615,335.4L616.7,338L616.7,338.9L618.6,340L618.8,339.2L617.9,338.2L618.8,338.2L620,339.3L620.1,340.1L621.2,339.9L621.8,340.3L621.3,343L620.7,344L621.8,344.7L620.9,345.1L620.4,346.1L621.2,347.2L620.6,348.1L620.2,349.5L619.6,349.6L618.3,348.2L617.4,348.6L616.9,351.3L616.3,352.2L615.6,351.5L615.9,350.6L615.6,349.8L614.4,349.7L614,350.3L614.7,351.5L615.1,352L614.7,353L615.4,354.2L614.9,355.2L613.6,355.2L613.6,355.9L615.1,356.7L614.2,357.5L612.2,357.3L612.1,357.7L613.7,358.9L614.2,360.1L612.8,361.2L612.4,363.1L611.9,363.1L600.2,364L601.2,361.7L602.6,360.5L602.8,359.5L604.5,358.3L605.2,357.3L605.4,355.4L605,354.4L603.9,353.9L603.6,352.2L586,353.2L564.7,354.2L549.9,354.7L535.9,355L523,355.3L522.8,343.8L522.6,326.1L522.6,322L522.4,306.9L522.3,295.2L522.6,294.4L521.3,294.4L520.9,293.8L520,294.1L519.3,293.4L518.5,293.2L518.1,291.9L517.2,291.2L517,290L517.3,289.1L516.5,289.2L515.7,288L514.7,287.4L514.5,286.7L513.5,285.8L513.5,284.9L514.2,284.9L514.8,282.8L515.8,282.3L516.1,281L517.3,281.4L517.6,280.3L516.8,280.7L516.6,280L517.4,279.2L516.3,278.3L516.5,277.7L515,277.5L514.6,278.2L513.1,278.1L512.8,277.5L511.7,277.3L509.9,275.2L509.3,274.6L508.2,274.5L508,273.9L508.4,272.3L507,271L507.1,270L505.6,269L505.7,268.6L504.7,268.1L503.3,264.5L503.2,263.7L503.8,263.4L503.6,262.4L503.2,263.1L502.1,263.2L502,261.9Z" },
  "30": { name: "Montana", bounds: [193.3, 39, 376.9, 155.7], path: "M198.1,39L210.5,41.7L222.8,44.1L232.9,46.1L243,48L265.4,51.9L272.8,53.1L284.5,54.8L302.8,57.5L314.1,59L326,60.5L340.4,62.1L352.8,63.5L364.4,64.6L376.9,65.7L375,88.2L374.8,91.2L373.8,102.8L371.9,124.4L371.1,134.3L370,148.1L369.4,155.7L369.1,155.7L357.8,154.7L339.5,152.8L339.2,153L333.9,152.4L320.8,150.9L320,150.7L298.3,148L289.1,146.7L288.8,146.5L278.5,145.2L272.8,144.3L271.3,144.3L263.3,143.1L262.1,142.7L257.8,142L256.5,150.5L256,153.9L254.9,153.3L254.7,152.3L253.6,151L253.8,150.1L252.6,147.6L251.5,146.7L251.1,147.6L249.9,147.5L250,148.5L248.9,149.7L249.6,151.1L249.1,151.2L247.8,150.5L247.3,150.7L245.9,150.2L245.7,150.6L243.8,151.1L243.3,149.7L241.4,150L240.6,149.7L239.3,150.1L238.2,149.6L237.4,148.6L236.7,148.5L235.4,149.2L234.6,150.9L233.4,150L232.9,150.3L232.1,149.6L230.4,149.3L229.5,148.7L228.5,149L227.4,150.2L227.5,151.3L227,151.6L226.5,150.7L224.8,149.1L224.6,148L225.1,147.4L224.2,145.5L224.7,145.2L224.7,143.8L224.3,143.3L224.1,141.5L222.5,140.1L220.8,140.7L220.7,139.8L219.4,138.5L219.1,136.6L219.9,136.4L220.2,134.2L219.3,133.3L219.5,132.8L218.6,132.3L218.4,130.8L217.4,129.2L216.9,127.4L217.2,125.9L216.7,124.4L217.2,123L216.1,122.8L216.9,121L215.7,119.8L214.6,118.2L214,118.4L213.8,119.4L213,119.7L211.6,121.1L210.6,121.4L209.8,121L209.4,122.1L208.1,122.6L207,121.3L206.6,120L205.2,119.7L205.5,118.7L205.3,117.9L206.4,117.5L206.6,116.3L205.8,114.9L207.2,113.4L208.6,113.7L209.1,113.1L208.6,111.8L209.1,111.4L208.3,110.3L208.2,109.1L208.9,108.1L208.1,107.3L208.4,106.3L209.5,106.4L209.5,104.3L210.1,104.2L210.7,102.9L210.8,101.7L211.7,100.6L211.5,99.3L212.4,99.3L213.4,96.3L212.9,95.7L211.9,95.7L211.1,96.2L208.9,95.6L208.7,94.6L209.1,94L208.1,93.1L206.8,93.8L206.8,91.9L205.5,91L204.8,89.7L205.3,88.4L204.5,87L203.7,86.9L203.5,85.1L202.3,82.9L201.6,82.3L200.8,79.7L199.6,79.3L198,78L197.8,76.9L195.3,74.3L197,74.2L196.4,73.5L196.4,72.5L195.8,71.8L196.9,71.1L196.4,69.6L196.8,68.7L195.6,67.2L195.6,65.7L194.9,65L193.5,61.7L193.3,61.5L198.1,39Z" },
  "31": { name: "Nebraska", bounds: [361.4, 201, 509.9, 275.2], path: "M365.3,201L376,201.9L391.1,203L401.6,203.7L403.8,203.9L421.6,204.9L434.2,205.4L448.2,205.9L456.8,206.2L457.3,207.3L460.7,209.1L462.8,210.4L464.3,211.7L465.7,211.6L466.8,210.5L467,209.6L467.8,209.4L468.7,209.8L470.4,210L471.5,209.7L474.2,210L474.6,209.6L476.4,209.5L477.9,210.1L478,210.9L479.3,211.8L481.8,212.1L482.1,213L483,212.7L484.7,213.4L484.7,214.1L486,214.2L486.6,214.7L486.2,215.6L487.4,216.9L488,217.9L489.2,217.7L489.7,218.5L490.6,218.3L491.4,218.4L491.7,219.3L491.1,220.3L491.1,221.5L491.9,222.4L492.6,224.2L492.1,224.6L492.3,225.8L493.6,227L493.5,228.5L494.2,228.7L494.2,229.6L495.9,230.2L495.3,231.7L496.3,233.7L496.9,234L496,236.5L496.4,237.7L496.1,238.2L496.7,239.2L496.4,239.9L497.1,240.7L497.6,240L498.1,240.7L497.9,241.6L499.3,241.9L498.9,244.7L500.1,245.2L499.9,246L499.2,245.8L499.5,248.1L500.7,248.2L500,248.8L500.3,250.3L500.2,252.2L500.9,253L500.7,253.7L501.2,255.1L500.6,255.4L500.7,257.6L499.9,258.5L500.7,259.7L501.6,260.2L502.3,261.3L502,261.9L502.1,263.2L503.2,263.1L503.6,262.4L503.8,263.4L503.2,263.7L503.3,264.5L504.7,268.1L505.7,268.6L505.6,269L507.1,270L507,271L508.4,272.3L508,273.9L508.2,274.5L509.3,274.6L509.9,275.2L495.4,275.2L479.9,275.1L464.8,274.9L453.9,274.6L443.4,274.3L432.4,273.9L422.4,273.5L404.8,272.5L393.9,271.9L395.3,249L382.2,248.2L370.8,247.3L361.4,246.5L365.3,201Z" },
  "32": { name: "Nevada", bounds: [83.3, 179.2, 197.7, 356.2], path: "M100.5,179.2L104.9,180.3L113.3,182.4L121.6,184.5L124.8,185.2L139.1,188.5L148.9,190.7L159.6,193.2L176.9,196.8L181.5,197.8L184.8,198.3L188.6,199.3L197.7,201.1L197.3,203.5L192.3,229.5L190.9,236.3L182.5,279.6L180.3,290.8L176.4,311L176,313.3L174.5,321L173.5,327L172.6,331.5L172.2,331.7L170,334.9L168.4,334.8L167.3,333.6L167.5,333.2L166.6,331.5L164.2,331.3L164.1,330.8L163.1,330.6L162.2,330.9L159.9,331.1L159.5,331.4L159.7,332.8L159.3,334.7L160.1,336.5L159.5,336.8L159,337.8L159.1,339L158.7,340L158.7,341.4L159.2,342.4L158.2,345.1L158.8,347.1L159,349.1L158.7,352.8L158.4,353.5L157.1,354L157.7,354.7L156.8,356.2L144.4,337.5L132.1,319L116.6,295.6L101.5,272.9L94.8,262.8L83.3,245.5L84.5,240.5L88.8,224.3L92,212.3L94,204L100.5,179.2Z" },
  "33": { name: "New Hampshire", bounds: [880.6, 102.4, 910.2, 164.8], path: "M886.1,110.5L885.9,109.3L886.6,107.7L886.6,105.9L885.8,105.4L886.7,105.2L887.8,103.3L889,104.2L890.5,103.9L890.9,102.4L894.8,114.3L897.7,123.3L901.3,135.2L902.9,140.1L903.3,140.4L903.6,143.5L904.5,145.2L907.5,147.2L907.8,149.2L910.2,150.1L909.5,153.2L909.5,154.8L909.1,155.1L907.7,154.9L906.2,156L906,157.3L904.8,157.2L904.1,158.1L904.5,159.3L903.4,159.4L902.9,160.7L891.8,163.2L884.1,164.8L882.3,163.4L881.7,161.7L881.6,160.1L882.4,159.5L882.7,158.5L882.1,157.6L882.3,156.1L881.7,155.6L881.5,153L881.8,151.6L881.2,150.6L881.1,148L880.6,147.3L880.6,145.8L881.2,145L881.1,142.6L882.2,140.7L882,138.8L882.9,136.2L882.4,135.5L883.1,133L882.1,130.9L882.1,129.8L881.6,129.2L881.8,127.9L883.7,126.8L885.1,126.3L884.9,125.7L886.4,124.6L887,122.9L887.9,122.1L887.3,121L887.9,120.6L887.5,119.1L886.9,118.6L885.6,116.8L886.3,115.8L886.3,114L886.9,112.7L885.7,111.3L886.1,110.5Z" },
  "34": { name: "New Jersey", bounds: [849.2, 204, 873.2, 259.1], path: "M849.2,245.8L849.7,244.4L850.2,242.4L850.8,241.4L852,240.1L853,239.8L854.8,238.7L854.8,236.9L857.6,233.7L858.7,233.1L859.1,232L859.8,231.9L860.6,230.8L859.5,229.8L858.2,229.3L857.5,228.4L856.1,227.7L855.4,226.5L853.7,226.4L853.3,225.6L852.9,223.6L852.3,223.2L850.7,223.4L849.9,220.8L850.1,218.7L850.7,218.7L851.5,216.1L849.7,214.3L849.6,213.8L851.1,212.3L851.8,211.1L851.5,210.6L852.8,208.7L853.2,205.9L854.1,204.5L855,204L862.4,206.6L869.8,208.9L870.1,209L870.1,211.5L869.2,216.4L868.9,217.2L866.9,218.3L867,220L866.6,221.4L866.8,222.3L868,222.5L868.9,221.9L871.4,222.4L871.5,221.5L872.4,224.8L872.4,229L872.7,233.9L873.2,237.3L872.8,239.1L871.2,244.6L869.9,247.5L868.3,248.9L867.1,250.9L866.1,254L865.4,257.2L864.4,258.6L863.3,259.1L862.6,259L862.6,257.6L863.1,254.9L862.9,253.8L861.5,253.4L860.4,253.6L860.3,253.1L858.8,253.5L858.6,254.3L857.6,253.1L855.4,252.4L854.2,251.3L853.9,251.6L852.3,250.5L851.7,249.8L850.4,249.5L850,247.7L850.2,246.8L849.4,246.3L849.2,245.8Z" },
  "35": { name: "New Mexico", bounds: [246.8, 328, 372.5, 458.4], path: "M264.6,328L278.8,329.9L292.5,331.5L303.2,332.8L303.3,333L315.3,334.3L334.6,336.2L336.7,336.5L348.5,337.6L372.5,339.4L371.6,350.8L370.9,350.7L370.2,360.9L366.7,407.5L364.6,429.6L362.9,453.3L350.3,452.3L338.7,451.3L327.5,450.3L317.8,449.4L295.1,447L294.8,448.9L294.3,449.3L294.9,450.9L296.3,452.1L279.2,450.1L264.2,448.2L262.9,458.4L246.8,456.3L251.4,423.6L252.9,412.9L257.6,378.5L259.5,365.1L264.6,328Z" },
  "36": { name: "New York", bounds: [767.5, 117.8, 903.1, 221.4], path: "M899.3,195.7L899.4,195.2L900.8,194.4L899.8,195.6L899.3,195.7ZM896.7,198L897.6,197.5L897.1,198.5L896.7,198ZM868.9,217.2L869.5,218.4L868.5,220.3L866.6,221.4L867,220L866.9,218.3L868.9,217.2ZM815.5,153.8L816.2,152.7L816.1,153.6L815.5,153.8ZM814.2,153.7L814.7,152.8L815.2,152.8L814.2,153.7ZM767.5,200.3L769.2,198.9L772.4,195.7L773.4,194.2L775,192.9L776.4,192.1L776.8,190.7L777.5,189.8L777.5,188.8L779.5,187.3L780.3,186.1L780,184.8L778.3,182.4L776.9,182L776.6,180.2L775.5,180.1L775.8,178.5L774.8,176L778.5,174L781.5,172.5L783.8,171.7L787.9,171.1L790,170.5L792.1,170.3L795.8,170.3L797.7,171.3L799.8,171.9L801.9,170.5L806.4,169.4L807.7,169.5L809,169.2L809.7,168.6L811.4,167.8L812.8,166.7L813.5,165L816.6,161.8L818.4,161.6L819.3,161.1L819.6,159.9L819.4,158.3L818.1,154.9L816.9,154.4L817.3,153.3L818.1,152.9L818.3,153.5L819.3,152.5L819,151.7L817.7,151L816.5,151.6L816.6,150.7L815.6,150.2L814.7,150.3L814.5,148.8L815,146.4L816,146.1L817.1,145L817,144.1L819.2,142L820.5,141.3L821.6,139.5L822.1,137.5L825.3,132.4L828.6,127.9L831.1,125.9L832.3,124.4L833.3,124.2L834.4,123.1L836,123.4L836.7,123L842.2,121.9L845.1,121.2L849.3,120L857.6,117.8L858.1,119.9L857.9,121.8L858.8,122.3L858.7,123.8L859.2,127.3L860.9,129L861.4,130.5L861.1,131.9L862,134L862,134.7L861.2,136.1L861.3,139.5L861.8,139.8L862.3,141.9L863.2,143.1L863.2,144.3L864.1,145.3L863.6,148.6L863.9,149.7L864.4,149.9L864.6,148.6L865.6,148.3L865.9,149.1L867.1,150.3L868.4,156.2L870.3,165.7L870.3,166.5L871,167.6L870.6,183.2L871.2,184L872.9,193.7L874.1,201L875.7,202.6L872.3,206L874,207.7L874.1,208.3L873.8,209.2L872.8,210.3L873,211.9L872.2,212L873,213L873.7,211.1L874.7,211L874.9,210.1L877,209.2L877.1,208.5L878.6,208.8L878.4,208L879.4,208.4L881.6,208.4L882.8,207.5L882.7,206.7L884.3,206.4L888.7,205.2L890.9,204.2L893.1,202L894.7,199.6L896.5,198.7L895.6,200.6L896.8,201.3L898,201.3L898.3,200.7L899.5,201.8L901.6,200L901.5,199.4L903.1,198.9L903.1,199.5L899.6,202.3L895.5,205.8L892.9,207.7L890,209.7L885.7,213L883.4,214.4L881.8,215L881.4,214.8L877.8,216.9L874.2,217.5L871.7,219.3L871.7,218.5L870.3,218.8L869.6,217.8L869.8,217L869.2,216.4L870.1,211.5L870.1,209L869.8,208.9L862.4,206.6L855,204L854.1,203.2L853.9,202.5L853.1,202.9L852.6,202.5L851.3,202.9L850.8,202.2L849.7,202.4L848.5,200.7L847.5,199.9L847.9,199.6L847.1,196.5L846.2,196.2L846.3,195.3L844.5,194.3L843.2,194.8L842.5,193.2L840.9,192.1L834.6,193.5L824.8,195.6L815.3,197.5L812,198.2L800.4,200.6L787.8,202.9L783.2,203.8L768.6,206.4L767.5,200.3Z" },
  "37": { name: "North Carolina", bounds: [712.6, 315.9, 871.3, 386.1], path: "M864.3,329.1L865.5,329.3L866.6,330.5L866.8,331.4L865.9,331.4L865.8,330.5L864.3,329.1ZM863.3,349.7L863.6,348.4L870.9,343.2L870.7,338.3L870.3,335.7L868.6,332.1L869.2,332.6L870.7,335.7L871,338.4L871.3,344.1L869.8,344.5L867.2,346.2L863.3,349.7ZM755.5,334L761,333.5L764.5,333L770.6,332.3L772.9,331.8L780.3,331.1L794.2,328.7L812.1,325.5L840.3,320L842.2,319.4L858.8,315.9L860.6,320.1L862,322.8L863.5,325.1L865.1,327L868.4,331.7L867.8,331.6L865.6,328.4L864.8,327.7L864,327.6L862.6,324.4L861,321.7L860.4,321.3L860.5,320.5L859.7,318.9L858.6,317.6L856.9,317.7L856.8,316.9L855.9,317.5L856.5,318.6L857.8,319.3L858.4,318.9L858.7,320.4L862.1,325.5L862.3,326.4L860.8,325.4L860.7,324.7L859.3,323L858.5,322.9L858.9,324.2L860,324.7L857.9,324.6L855.4,322.8L854.4,322.8L856,324.4L856.7,324.6L857.3,325.6L855.3,326.7L853.3,325.7L855.2,327.1L854.8,327.4L850.1,326.4L851.8,327.5L853.3,327.6L852.9,328.1L851.4,328.6L850.8,329.9L849.9,330.6L848.7,330.8L848,330.2L846.8,330.3L845.6,328.1L845.4,327L845.8,325.3L845.5,325.1L844.9,326.8L845,328.3L845.9,330L847,331.5L846.8,332.2L847.4,332.7L849.9,332L852.1,330.6L852.9,331.4L856,329.6L858,329.2L859,329.8L859.2,330.6L858.7,332.3L859.1,333.3L859.9,336.6L860.4,336.2L860.4,333.9L860,331L860.7,329.8L860.2,329.5L861.9,328.7L863.3,329.4L864.9,331.9L864.8,332.9L865.7,334.5L865.3,335.1L865.7,336.1L865.1,337.3L863,337.9L861.7,340.5L861.5,342.1L860.8,342.3L860.9,343.1L859.7,344.3L858,344.2L856.1,344.7L853.4,344.7L852.2,344L850.9,342L852.9,341.5L853.1,340.5L851.4,341.4L850.6,341.3L850.1,342.1L850.9,343.1L851.6,344.7L849.1,344.3L848.2,344.6L846.8,344.2L844.7,344.1L843,343.4L843.1,344L844.4,345L845.8,344.8L850.3,345.9L853.4,345.8L854.2,347.1L853.4,349.5L853.4,350.5L852.7,351.9L849.6,355L845.9,353.5L846.2,354.7L848,355.5L850.5,355.8L852.5,353.8L854.8,352.9L855,351.4L855.7,351.5L856.2,352.7L856.9,353.2L858,353.1L857.1,351.8L858.7,352.1L859.2,353.5L858.2,355.3L857.1,355.8L856,358.8L855.9,360.3L854.7,360.1L854.5,358.6L853.7,358.3L854.1,359.9L853.1,360.2L856.1,360.9L857.5,357.7L858.7,355.5L860,353.7L862.3,349.7L862.9,350L861.5,351.9L857.9,357.4L856.5,360.6L856.1,362.4L855.6,361.2L853.1,360.6L851.4,360.8L846.8,362.6L843.8,364.5L842.1,366.5L839.8,368.4L838,370.5L835.6,373.9L834.5,376.7L833.4,382.7L833.4,384.1L832.5,384.1L832.2,383.5L829.2,383.5L825.4,384.5L822.8,386.1L807.4,375.1L804.9,373.2L798.1,368.4L794.6,369L777.6,371.5L777.5,368.8L774.1,365.4L772.4,367.1L772,364.7L759.6,366L752.8,366.7L749.4,367L747.6,367.6L747.2,367L746.6,368.2L745.6,368.2L741.5,370.6L740.7,371.4L740.5,370.9L734.9,373.7L725.5,375.1L725.6,375.2L712.7,376.8L712.6,371.4L713.9,370.3L714.2,370.8L716.1,370.4L717.3,369.2L716.9,368L717.4,367.4L717,366.7L717.4,365.9L718.8,364.8L719.2,363.8L720.2,363.5L721.1,362.5L726.3,361.7L726.9,360.6L728.2,359.8L728.7,359.2L729.4,359.2L730.2,357.5L731.2,357.3L731.6,356.5L733,355.7L734.6,355.9L735,355.4L735.9,353.4L735.7,351.7L736.5,351.5L737.2,352.1L737.7,351.3L737.8,350.2L740.1,348.3L740.9,349.1L740.8,350.5L741.8,350.7L743.4,349.2L744.2,347.2L746.1,345.9L746.8,345.9L747.2,345.2L748.6,345.2L749,346.1L750.7,345.5L752.4,341.1L754.2,339.5L755.7,339.8L755,338.2L755.6,336.7L755.2,335.5L755.5,334Z" },
  "38": { name: "North Dakota", bounds: [371.1, 65.7, 489.3, 139.9], path: "M376.9,65.7L387,66.5L404.4,67.8L420.8,68.8L431.2,69.3L444.9,69.8L454.8,70.2L468.6,70.5L479.5,70.7L479.3,71.4L480.3,74L480.8,76.8L481.4,77.7L481.2,79L480.5,80.8L480.8,82.8L480.6,85.1L481,86.9L480.5,89.4L481.2,91.6L481.6,92L481.8,94L482.4,95L483,97.6L484.9,102.5L484.7,106.4L485.1,108.2L485,111.2L485.3,112.2L485.3,116.5L485.9,118.1L485.5,119.8L485.9,121.9L485.5,123.3L486.4,125.6L486.5,127.6L487.5,129.9L488.6,130.9L488.7,133.4L489.3,136.5L489,137.6L489.1,139.9L477.2,139.8L459.9,139.4L442.8,138.8L432.2,138.3L412.5,137.3L403.7,136.7L392.2,136L378.7,134.9L371.1,134.3L371.9,124.4L373.8,102.8L374.8,91.2L375,88.2L376.9,65.7Z" },
  "39": { name: "Ohio", bounds: [685.8, 209, 761.1, 295], path: "M720.6,223L721.6,222.5L721.3,223.3L720.6,223ZM718.7,222.3L718.6,220.8L719.6,221.1L718.7,222.3ZM685.8,225.4L693.2,224.2L708.3,221.7L708.5,222.3L709.7,222.6L710.5,222.1L712.2,223.2L715.1,224L716.4,225.1L717.6,225.5L718.8,224.5L719,223.6L720,224.5L721.1,224.4L721.1,224.9L723.2,226.7L725.6,227.4L727.4,226.1L729.2,225.7L730.1,224.9L733,223.3L734.3,223.6L737.5,223.2L739.7,221.2L741.9,218.3L744.2,215.9L744.8,215.8L748.5,213L750.2,212.4L756.1,209L761.1,239.2L759.2,240L758.9,241L759.7,241.8L760.5,243.2L760.4,244.8L760.9,246.6L760.8,248L760.3,248.4L759.8,250.6L759.9,251.9L759.5,252.5L759.8,254.9L759.8,256.2L758.9,256.6L759.3,257.4L758.8,258L759,259L758.5,260.1L759.2,260.8L758.7,261.6L758.8,263L757.8,263.4L755.8,266.1L754.9,267.9L754.2,268.3L753.7,269.4L752.9,269.5L751.7,270.6L750.9,270.6L749.8,269.4L748.1,271.4L748.1,273L746.4,273.1L746.2,274.2L745.2,275.5L745.7,277.3L744.6,277.8L745.7,279.4L745.5,280.4L746,281.3L745,280.9L744,282.7L743.2,282.2L743.6,281.3L742.8,280.3L742.1,280.3L741.4,279.5L740.2,281L739.5,282.9L739.7,284.2L738.6,285.4L739.5,287.3L739.9,289.3L739.7,289.8L738.2,290.1L738,290.5L737.9,293.5L736.5,293.9L734.4,295L733.2,294.8L732.8,293.7L730.5,292L729.2,292.1L728.4,291.7L727,287.9L725.6,288.8L724.7,289L724.4,289.7L723.4,290.4L723,291.5L721.3,291.7L720.6,292.4L719,291.3L717.2,291.1L716.2,290.6L714.6,291.3L713.9,292.7L712,292.2L711.7,291.4L710.6,290.9L710.2,290.2L708,289.7L706.5,290.3L703.9,289.8L703.3,287.9L702.2,286.6L701.7,285.5L700.9,284.9L699.4,284.6L699.2,283.6L698.5,283.2L697.9,283.9L696.4,284.6L694.9,284.1L693.7,283.2L692.5,284.3L690.7,268.2L689.6,257L688.5,247.4L685.8,225.4Z" },
  "40": { name: "Oklahoma", bounds: [371.6, 339.4, 526.8, 421.2], path: "M372.5,339.4L377.9,339.9L389.7,340.7L401.9,341.4L414.1,341.9L428.5,342.5L432.6,342.7L443.3,343.1L458.9,343.6L471.8,343.8L489,344L506.8,344L522.8,343.8L523,355.3L523.6,359.8L526.8,380.5L526.6,393.5L526.4,420.7L525.8,421.2L524.5,419.8L523.4,420L523.2,419.5L522.2,419.6L521,418.1L519.6,418.5L518.2,417.4L517.3,415.7L515.8,415.7L514.3,414L512.4,413.5L511.4,415.4L509.1,415.7L506.5,415.4L506.2,414.2L503.4,415.3L502.6,415.1L502.6,415.9L501.8,415.8L500.9,416.3L499.2,415.2L499.1,415.8L498.2,415.7L497.7,416.3L496.1,416.1L494.7,416.9L494.8,417.9L493.9,418.4L492.8,417.9L492.2,419.3L491.6,419.8L490.1,417.8L488.7,417.8L488.2,416.7L487.3,416.8L486.2,416L487.1,415.2L485.4,414.7L485.1,416L483.8,416.6L483.2,415.6L482.1,416.1L481.5,415.6L481.1,413.8L479.4,413.7L479.6,415.2L477.7,416.9L477.5,418.8L476.1,418.5L475.5,417L476.2,416.2L476,415L475.4,414.4L474.5,415.6L473,415.4L472.3,416.6L471.3,416.6L470.7,416.1L470.7,414.6L470,414.3L469,414.7L468.2,414.4L468.3,413.5L467.5,412.8L466.5,412.7L466,413.6L463.7,415.6L463.1,415.8L460.9,414.6L461.7,412.5L461.2,412.1L460.2,412.4L459,412.1L458.5,410.3L459.1,409.2L458.5,408.7L457.6,409.6L455.2,409.1L454,408.5L452.9,410.2L451.7,410.6L450,408.6L448.7,408.2L447.9,408.9L446.6,409.1L445.7,408.3L443.8,407.8L442.5,406.8L441.4,407.2L439.6,406.7L438.7,406.8L438.4,404L435.3,401.1L434.9,402.9L434.1,402.9L432.7,402L431.6,401.9L431.2,402.8L429.4,402.6L428.3,401.6L425.9,398.5L424.9,397.9L423.9,398.3L425.8,353.9L415.9,353.5L406.2,353L396.5,352.4L385.2,351.7L371.6,350.8L372.5,339.4Z" },
  "41": { name: "Oregon", bounds: [31.1, 68.7, 175.7, 190.7], path: "M71,70.2L72,70.3L72.6,71.4L72.2,72.4L72.9,73.5L74.2,73.9L76.2,73.5L77,73.8L79.5,76.9L79.6,78.2L80.1,80L80,82.1L79.5,83.3L79.7,84.1L79,86.8L80.1,88.1L82.9,89.8L84.3,90.3L84.9,91.1L86.2,91.5L87.3,91.1L88.6,91.3L92,90.6L92.9,89.9L93.8,89.9L94.9,90.5L98.2,90.6L100,91.9L101.1,91.9L102.7,93.1L102.8,94.7L103.6,94.8L104.6,94.2L106.8,94.6L107.5,95.1L108.2,94.6L111,94.3L112,93.9L113.2,94.4L113.8,95.4L115.3,95.9L118.4,96L119.3,95.4L120.9,95.3L122.8,94.9L125.4,95L127.5,95.3L128.5,94.4L129.4,94.2L130.5,94.9L134.3,95.1L136.2,95.7L138.3,95.2L138.7,94.8L151.9,98L170.5,102.4L170.9,104.3L172,106.8L173,107L173.3,107.9L174.4,108.3L175,109L175,110.6L175.7,112.3L173.8,114.4L173.5,115.4L172.9,115.7L171,118.1L169.2,121.9L167.7,123.5L166.8,124.1L166.4,125.1L166.6,126.2L164.2,129.1L161.9,129.9L159.8,133.2L159.5,134L158.2,134.8L158,136L157.4,136.6L158,138.2L157.3,138.9L157.9,139.9L159.1,139.7L159.7,141L160.9,141.2L160.7,142L161.4,142.3L161.7,143.3L160.8,144.3L160.1,144.5L160.4,146.1L159.2,148.3L158.9,149.3L158.3,149.4L157.9,150.5L148.9,190.7L139.1,188.5L124.8,185.2L121.6,184.5L113.3,182.4L104.9,180.3L100.5,179.2L95.8,178L83.7,174.8L68.2,170.2L62.1,168.4L57.9,167.3L51.3,165.4L49.8,164.8L46.5,164.1L40.3,162.3L32.6,160L31.6,158.4L31.1,156.7L31.4,155.2L31.1,153.5L31.4,151.6L32,149.2L33.6,146.5L33.8,144.6L33.3,144L33.3,142.6L32.7,142.4L32.8,139.9L35.4,136.9L36.6,134.5L37.5,133.1L38.4,131.4L38.3,130.5L39.6,129.8L41,128.2L42.7,125.8L45.4,120.7L48,114.4L49.6,109.9L50.9,107.3L51.3,106L52.7,102.7L53.7,98.9L54.7,97.5L57.2,92.5L58.3,89.6L58.6,87.9L59.3,86.3L59.4,85L59.9,84.6L61.1,81.4L61.5,79.8L61.1,79.1L61.9,77.5L62.3,76L62.2,75L63.2,74.6L63.6,73.9L64,71.5L63.8,68.9L64,68.7L65,70.6L65.7,71.1L65.7,70.3L67.5,70.3L67.9,71L68.9,70.6L69.6,70.9L71,70.2Z" },
  "42": { name: "Pennsylvania", bounds: [756.1, 192.1, 860.6, 259.9], path: "M756.1,209L759,207.1L761.7,204.9L762.1,203.6L763.1,203.9L765,202.2L767.5,200.3L768.6,206.4L783.2,203.8L787.8,202.9L800.4,200.6L812,198.2L815.3,197.5L824.8,195.6L834.6,193.5L840.9,192.1L842.5,193.2L843.2,194.8L844.5,194.3L846.3,195.3L846.2,196.2L847.1,196.5L847.9,199.6L847.5,199.9L848.5,200.7L849.7,202.4L850.8,202.2L851.3,202.9L852.6,202.5L853.1,202.9L853.9,202.5L854.1,203.2L855,204L854.1,204.5L853.2,205.9L852.8,208.7L851.5,210.6L851.8,211.1L851.1,212.3L849.6,213.8L849.7,214.3L851.5,216.1L850.7,218.7L850.1,218.7L849.9,220.8L850.7,223.4L852.3,223.2L852.9,223.6L853.3,225.6L853.7,226.4L855.4,226.5L856.1,227.7L857.5,228.4L858.2,229.3L859.5,229.8L860.6,230.8L859.8,231.9L859.1,232L858.7,233.1L857.6,233.7L854.8,236.9L854.8,238.7L853,239.8L852,240.1L850.8,241.4L849.2,241L848,241.2L846.5,241.9L845.6,243L844.9,244.6L837.3,246.2L824.5,248.9L816.4,250.5L798.2,254L782.3,256.9L775.9,258L764.5,259.9L761.1,239.2L756.1,209Z" },
  "44": { name: "Rhode Island", bounds: [898.8, 176, 912.8, 196], path: "M910.5,182.8L911.6,182.9L912.8,186.4L911.8,187.6L911,185.7L910.5,184L910.1,184.2L911,187.2L910,187.4L910,188.1L909.1,188.3L909.6,185.4L909.5,184.4L910.5,182.8ZM908.4,188.4L908.1,186.2L908.5,186.1L909,187.7L908.4,188.4ZM906.7,196L907,194.3L907.8,195.9L906.7,196ZM901.7,193.5L902.1,192.8L901.6,191.4L902.2,191.1L901,185.8L898.8,178L905.5,176L906.2,178.8L906.9,178.5L907.7,181L909,181.4L909.8,182.1L909.9,183L909.3,184L908.8,182.6L906.7,181.2L907.3,183.4L906.3,183.6L907.1,184L907.6,185.6L907,186L907.7,186.9L908.1,188.2L907.6,190.7L905.4,191.6L904,192.7L901.9,193.8L901.7,193.5Z" },
  "45": { name: "South Carolina", bounds: [731.2, 364.7, 822.8, 434.6], path: "M734.9,373.7L740.5,370.9L740.7,371.4L741.5,370.6L745.6,368.2L746.6,368.2L747.2,367L747.6,367.6L749.4,367L752.8,366.7L759.6,366L772,364.7L772.4,367.1L774.1,365.4L777.5,368.8L777.6,371.5L794.6,369L798.1,368.4L804.9,373.2L807.4,375.1L822.8,386.1L819.8,387.9L818.2,389.5L816.3,392.2L815.1,394.9L814.2,396.2L813.5,398.8L813.4,401.7L813.6,403.6L812.7,404.8L811.3,405.9L811,407.9L809.8,407.9L808.8,408.4L807.9,407.8L806.9,408.6L806.5,410.1L807.4,410.2L807.4,410.8L805.4,412.5L805,413.6L802.9,415.1L802.1,414.5L801.4,415.4L802.6,415.6L802.5,416.8L801,418.1L800.6,419L799.2,419.3L798,420L797.5,421L797,420.7L794.9,422.9L794.2,422.6L793.4,423.3L793.1,422.7L792.2,422.9L792.1,423.7L793.4,425.2L793,426.9L791.2,428.2L790,428.8L789.7,428.1L788.3,427.5L787.4,428.4L788.4,428.8L789.5,429.8L788.8,431.2L787.2,432.7L786.4,433L785.7,434.2L786.1,434.6L785.3,434.5L783.6,433.4L782.5,433.9L781.4,433.4L781.2,431.8L780.2,430.7L780.8,429.6L778.6,426.5L778.7,425.8L776.8,424L775.1,423.8L774,422.7L774.3,422.2L773.5,421.1L773.7,420.1L773.2,419.3L773.2,418.1L772,417.3L772.2,416.9L771.3,416L771.3,414.4L769.6,413.6L768.7,412.8L766.9,412.6L765.7,411.8L765.4,410.5L764.7,410.7L763.7,410L763.6,408.7L762.4,408.5L761.6,407.7L761.9,405.8L760.4,405L759,403.4L757.8,402.9L757.3,403.1L756,402.3L754.5,399.6L752.6,398.1L751.1,397.7L748.9,396.1L748.3,396.2L747.4,394.4L746.4,393.6L745.5,392.3L744.4,391.4L743.8,389.4L742.7,387.9L741.9,387.4L741.1,385.4L739.5,384.9L738.4,385.4L736.7,384.6L735,382.8L733.8,382.8L731.7,381.5L731.2,380.4L731.6,379L732.5,378.1L732.9,376.8L734.8,375.1L734.9,373.7Z" },
  "46": { name: "South Dakota", bounds: [365.3, 134.3, 490.8, 218.5], path: "M369.1,155.7L369.4,155.7L370,148.1L371.1,134.3L378.7,134.9L392.2,136L403.7,136.7L412.5,137.3L432.2,138.3L442.8,138.8L459.9,139.4L477.2,139.8L489.1,139.9L488.8,142.5L487.7,144.1L484.8,146.3L484.4,147.3L485.9,149.4L486.4,150.7L487.1,151.7L488.2,151.8L490.2,153L490.8,154.3L490.8,167.9L490.6,195.2L488.2,195.2L488.3,196.7L489.5,197.9L489.4,199.6L488.5,199.8L488.8,201.5L490,201.5L490.3,203.2L490.8,203.9L490.4,205.2L489.6,205.5L489.8,207.6L489.1,208.4L489,210L487.5,211.9L487.6,213.3L489.1,214.5L490.1,216.8L489.9,217.6L490.6,218.3L489.7,218.5L489.2,217.7L488,217.9L487.4,216.9L486.2,215.6L486.6,214.7L486,214.2L484.7,214.1L484.7,213.4L483,212.7L482.1,213L481.8,212.1L479.3,211.8L478,210.9L477.9,210.1L476.4,209.5L474.6,209.6L474.2,210L471.5,209.7L470.4,210L468.7,209.8L467.8,209.4L467,209.6L466.8,210.5L465.7,211.6L464.3,211.7L462.8,210.4L460.7,209.1L457.3,207.3L456.8,206.2L448.2,205.9L434.2,205.4L421.6,204.9L403.8,203.9L401.6,203.7L391.1,203L376,201.9L365.3,201L366.3,188.3L367.5,175.1L369.1,155.7Z" },
  "47": { name: "Tennessee", bounds: [602.8, 333.4, 756, 386.7], path: "M611.9,363.1L612.4,363.1L612.8,361.2L614.2,360.1L613.7,358.9L612.1,357.7L612.2,357.3L614.2,357.5L615.1,356.7L613.6,355.9L613.6,355.2L614.9,355.2L615.4,354.2L614.7,353L615.1,352L614.7,351.5L615.6,351.5L616.3,352.2L616.9,351.3L619,351L627.4,350.5L641.4,349.5L641.7,348.5L640.8,345.4L644.8,345.4L644.8,346.1L652.4,345.2L658,344.7L667.4,343.6L667.9,343.9L668.9,343.4L672,343.2L677.5,343L681.1,342.8L687.3,342.3L692.5,341.5L695.6,341.3L698.9,341.2L704.2,340.8L714.2,339.7L719.6,339.2L719.8,338.7L726.9,337.8L727.2,337.9L737.3,336.5L750.9,334.5L751,334L756,333.4L755.5,334L755.2,335.5L755.6,336.7L755,338.2L755.7,339.8L754.2,339.5L752.4,341.1L750.7,345.5L749,346.1L748.6,345.2L747.2,345.2L746.8,345.9L746.1,345.9L744.2,347.2L743.4,349.2L741.8,350.7L740.8,350.5L740.9,349.1L740.1,348.3L737.8,350.2L737.7,351.3L737.2,352.1L736.5,351.5L735.7,351.7L735.9,353.4L735,355.4L734.6,355.9L733,355.7L731.6,356.5L731.2,357.3L730.2,357.5L729.4,359.2L728.7,359.2L728.2,359.8L726.9,360.6L726.3,361.7L721.1,362.5L720.2,363.5L719.2,363.8L718.8,364.8L717.4,365.9L717,366.7L717.4,367.4L716.9,368L717.3,369.2L716.1,370.4L714.2,370.8L713.9,370.3L712.6,371.4L712.7,376.8L701.4,378.2L693.3,379.3L689.2,379.7L685.2,380L666.5,381.9L655.9,382.6L641.5,383.7L641.6,384L630.2,384.9L618.9,385.7L602.8,386.7L603.1,385.7L604.6,385.9L605.2,383.8L605.8,383.4L606.5,383.7L607.1,383.2L606.1,382.1L606.9,381.5L606.3,380.7L605.4,380.6L605.1,379.7L606.1,379.5L606.6,377.6L605.8,377L605.5,377.8L604.7,377.7L604.8,376.8L605.7,375.7L606.6,375.7L606.9,377.1L607.5,375.7L606.9,374.8L607,373.8L607.9,373.5L609.2,374.5L609.4,373.7L608.4,372.9L610.2,371.6L610.1,370.8L609,371.2L608.3,370.5L608.4,369.4L609.1,368.8L609.7,369.2L610.8,368.7L611.3,367.6L612.7,367.3L611.6,366.4L611.5,365.7L612.4,365.3L613.1,365.7L613.7,365.2L612.2,363.8L611.9,363.1Z" },
  "48": { name: "Texas", bounds: [294.3, 350.7, 546.1, 597.6], path: "M371.6,350.8L385.2,351.7L396.5,352.4L406.2,353L415.9,353.5L425.8,353.9L423.9,398.3L424.9,397.9L425.9,398.5L428.3,401.6L429.4,402.6L431.2,402.8L431.6,401.9L432.7,402L434.1,402.9L434.9,402.9L435.3,401.1L438.4,404L438.7,406.8L439.6,406.7L441.4,407.2L442.5,406.8L443.8,407.8L445.7,408.3L446.6,409.1L447.9,408.9L448.7,408.2L450,408.6L451.7,410.6L452.9,410.2L454,408.5L455.2,409.1L457.6,409.6L458.5,408.7L459.1,409.2L458.5,410.3L459,412.1L460.2,412.4L461.2,412.1L461.7,412.5L460.9,414.6L463.1,415.8L463.7,415.6L466,413.6L466.5,412.7L467.5,412.8L468.3,413.5L468.2,414.4L469,414.7L470,414.3L470.7,414.6L470.7,416.1L471.3,416.6L472.3,416.6L473,415.4L474.5,415.6L475.4,414.4L476,415L476.2,416.2L475.5,417L476.1,418.5L477.5,418.8L477.7,416.9L479.6,415.2L479.4,413.7L481.1,413.8L481.5,415.6L482.1,416.1L483.2,415.6L483.8,416.6L485.1,416L485.4,414.7L487.1,415.2L486.2,416L487.3,416.8L488.2,416.7L488.7,417.8L490.1,417.8L491.6,419.8L492.2,419.3L492.8,417.9L493.9,418.4L494.8,417.9L494.7,416.9L496.1,416.1L497.7,416.3L498.2,415.7L499.1,415.8L499.2,415.2L500.9,416.3L501.8,415.8L502.6,415.9L502.6,415.1L503.4,415.3L506.2,414.2L506.5,415.4L509.1,415.7L511.4,415.4L512.4,413.5L514.3,414L515.8,415.7L517.3,415.7L518.2,417.4L519.6,418.5L521,418.1L522.2,419.6L523.2,419.5L523.4,420L524.5,419.8L525.8,421.2L526.4,420.7L526.9,420.5L527,421.6L528.5,422.1L528.8,422.8L530,422L531.3,422.6L532.1,421.6L533.2,422.5L533.6,422.1L534.8,422.5L535,434.7L535.5,457.9L536,458.1L536.8,459.6L538.1,460.3L538.8,461.9L539.8,463L539.7,463.6L540.2,465L539.6,467L540,468L541.8,469.1L541.4,469.9L542.4,470.6L543.1,472.3L542.7,473.5L544,474.4L544.4,476.5L545.4,476.2L545.5,478.6L546.1,479.9L545.2,480.5L546,481.8L545.2,483L545.5,484.5L544.3,486.4L544.3,487.5L543.1,488.7L543.2,489.6L542.3,490.3L542.1,491L542.6,491.5L543,493.3L541.8,494.5L541.7,495.7L542.7,496.6L542.6,498.5L543.3,500.1L542.5,501.3L543.1,502.1L541.5,503.5L540.2,506.4L538.9,507.5L540.6,510.4L540.6,510.6L537.4,510.6L534.8,511.5L525.1,516.1L523.8,516.9L523.1,518L522.2,518.2L522.4,517.4L524.2,515.5L525.8,515.2L526.3,514.2L527.7,514.4L526.7,513.3L522.9,514.4L522.1,514.3L523.5,512.2L523.8,510.6L523.7,509.2L522.5,508.6L521.3,509.2L520.2,511.2L519.3,511.5L518.4,510.5L517.5,512.2L518.1,512.8L517.4,513.8L518.1,514.8L519.6,515.1L519.2,516.2L519.9,516.6L519.9,519.4L518.8,519.8L515.9,522.5L514.7,522.2L514.6,523.9L515,524.4L517.8,522.2L520.2,519.9L521.3,519.4L521.5,518.4L523.1,518.8L521.7,520L517.3,523.1L515.4,524.9L513.1,526.7L510.3,529.5L509.2,529.7L501.8,534.1L496.5,536.6L494.1,537.8L492,539.2L490.2,540.5L489.2,542L485.3,544.1L482.1,546.6L480.2,548.4L477.8,551.1L477,552.8L475,555.4L473.5,558.1L471.8,561.9L470.5,566.2L470,570.2L470.2,574.1L470.5,576.1L471.5,580.2L472.4,582.8L473.5,587.2L474.2,592.2L473.7,591.3L473.4,588.5L471.8,581.9L470.1,581.5L471.3,581L469.7,576L469.5,574L469.6,568.9L470.4,563.6L471.6,560.1L473.1,557.3L474.1,555.9L474.8,554.2L475.4,553.6L475.3,552.6L476.2,551L477.6,550.3L480.4,546.2L481.6,545.8L482.2,544.8L483.3,544.8L486,542.5L489.2,541.4L489,539.7L486.4,541.1L485.6,541.9L484.3,542L483.8,539.9L482.5,539.9L481.8,542.5L482.2,543.3L482,544L479.3,546.3L477.4,545.7L477.2,544.8L474.9,546L473.6,547L475.2,547.7L477.4,546.5L477.4,548.1L476.9,548.5L474.1,553L473.3,552.9L472.8,551.8L471.3,552L471,551.6L468.7,551.8L468,551.5L467.5,552.3L468.4,552.9L470.2,552.6L469.9,553.9L470.4,554.8L472.7,555.8L471.3,558.7L470.4,561.4L470.3,562.2L469.4,564.3L467.4,565.3L466.7,564.9L467.7,564.5L467.9,563.4L467.3,563.3L465.4,565L465,566L466.7,566.3L468.6,565.6L469.2,565.7L468.6,571.8L468.1,575.8L467.9,575.9L468.5,580.3L469.1,581.6L469.1,583.2L469.8,583.2L471.8,588L471.1,588.9L471.5,591.7L471.9,592.1L473.4,592.4L473.4,593L474.3,592.7L474.4,595.1L471.7,595.1L471.7,595.5L469.7,596.1L469.7,597.6L468.2,597.4L468.2,596.9L466.7,596.6L466.2,595.5L465.4,595.4L464.1,593.5L461.8,593.2L461,592.5L459.2,592.4L457.6,592.7L456.3,592.3L456.1,592.9L455.3,592.3L453.9,592.6L451.8,592.1L450,590.6L450,589.9L449,590.1L447.4,588.6L446.8,588.8L445,587.8L443.2,588.2L441.5,586.1L440.8,586L440.1,585.1L438.8,585.3L437.2,584.3L435.8,584L434.9,584.3L434.3,583.6L434.8,582.5L434.1,581.4L433.2,581L433.1,579.2L432.7,578.4L432.5,576.8L431.9,576.3L431.4,574.1L430.2,573.3L430.4,572.7L429.2,572L429.3,571.1L428.6,570.1L427.9,569.9L428.4,568.4L428.2,567.1L428.5,566.5L428.2,564.8L427.1,564.3L427.2,563.6L426.3,563.3L427,562.8L427.6,559.5L426.7,559.2L427.1,557.7L426.2,556.5L425.3,555.9L424.6,556.2L424,555.4L423.3,555.5L422,553.7L419.9,552.1L419.5,550.6L419.5,549.5L418.8,548.9L419,548L417.8,547.6L417.3,546L416.6,545.5L416.1,544.1L413.6,543L412,540.8L412.1,540.1L411,538.1L411.3,537.2L410.7,536.4L411.3,535.8L410.4,535.5L409.9,534.6L410.2,533.9L409.3,533.3L409.3,532.6L408.3,532.1L408.2,530.3L407.7,529.7L407.5,528.3L407.1,528.3L406.5,526.5L405.9,526.5L405.7,524.6L405.1,521.7L403.4,520.2L403.6,519.7L403,518.5L401.5,517.7L401.3,517.1L399,515.5L398.1,513.5L396.3,512.9L395.9,512.1L394.2,511.5L394.6,510.8L394.2,509.3L393.6,510.6L393.3,510.1L393.3,508.7L392.3,508.5L391.5,506.3L390.3,505.7L389.2,506L388.9,505.3L388.3,505.7L385.8,505.8L384.4,505.2L382.9,504.8L381.4,505L380.6,504.4L379,504.9L377.8,504.7L376.5,503.4L375.6,503.4L374.2,502.5L373.4,502.6L372.4,504.9L370.4,504.4L369.4,505L368.9,504.8L366.4,505.5L366.2,506.5L365.3,507.3L365.2,508.2L364.6,508.3L364.5,509.3L363.7,509.9L362.8,513.5L362,513.6L361.4,515.7L362,516.1L361,517.2L359.4,517.5L359,518.5L357.2,520L356.8,521.6L354.5,521.3L353.5,521.4L352.6,520.4L350.7,519.8L349.9,519.1L349.3,517.9L348.3,517L346.6,516.8L345.1,516L343.9,514.4L343,513.8L340.3,513.2L337.2,510.9L335.1,507.8L333.6,507.5L332.5,506.2L331.3,505.3L330,503.6L329.7,501.4L328.9,500.3L327.7,497.8L327.8,496.6L327.5,494.9L328,494.1L328.1,492L326.9,489.1L325.2,486.9L325.4,486.3L324.8,482.8L324.4,481.9L323.5,481.7L323,479.9L321.9,479.8L321.1,478.4L320.3,478.2L319.1,476.9L318.3,476.9L315.8,475.4L315.8,474.6L313,472L312.3,469.8L311.5,469L309.2,467.6L307.7,464.6L306.5,464L306.2,462.7L305.3,462L303.9,461.7L301.7,459.9L301.1,458.1L300.5,457.6L300.2,456.2L299,453.5L297.7,452.6L296.9,452.9L296.3,452.1L294.9,450.9L294.3,449.3L294.8,448.9L295.1,447L317.8,449.4L327.5,450.3L338.7,451.3L350.3,452.3L362.9,453.3L364.6,429.6L366.7,407.5L370.2,360.9L370.9,350.7L371.6,350.8Z" },
  "49": { name: "Utah", bounds: [176, 201.1, 277.1, 328], path: "M197.7,201.1L200.2,201.7L228.2,206.4L228.5,206.6L239.5,208.4L247.2,209.6L243.5,232.2L252.7,233.7L268.9,236.1L277.1,237.2L275.9,245.8L275.5,248.5L271.2,279.7L269.8,288.9L268.4,299L268.4,301.5L266.4,315.9L265.8,319.4L264.6,328L254.3,326.5L239.3,324.3L238.8,324.1L222.6,321.6L202.7,318.2L184.7,315L176,313.3L176.4,311L180.3,290.8L182.5,279.6L190.9,236.3L192.3,229.5L197.3,203.5L197.7,201.1Z" },
  "50": { name: "Vermont", bounds: [857.6, 110.5, 887.9, 167.6], path: "M857.6,117.8L865.3,115.8L873.7,114L886.1,110.5L885.7,111.3L886.9,112.7L886.3,114L886.3,115.8L885.6,116.8L886.9,118.6L887.5,119.1L887.9,120.6L887.3,121L887.9,122.1L887,122.9L886.4,124.6L884.9,125.7L885.1,126.3L883.7,126.8L881.8,127.9L881.6,129.2L882.1,129.8L882.1,130.9L883.1,133L882.4,135.5L882.9,136.2L882,138.8L882.2,140.7L881.1,142.6L881.2,145L880.6,145.8L880.6,147.3L881.1,148L881.2,150.6L881.8,151.6L881.5,153L881.7,155.6L882.3,156.1L882.1,157.6L882.7,158.5L882.4,159.5L881.6,160.1L881.7,161.7L882.3,163.4L884.1,164.8L871,167.6L870.3,166.5L870.3,165.7L868.4,156.2L867.1,150.3L865.9,149.1L865.6,148.3L864.6,148.6L864.4,149.9L863.9,149.7L863.6,148.6L864.1,145.3L863.2,144.3L863.2,143.1L862.3,141.9L861.8,139.8L861.3,139.5L861.2,136.1L862,134.7L862,134L861.1,131.9L861.4,130.5L860.9,129L859.2,127.3L858.7,123.8L858.8,122.3L857.9,121.8L858.1,119.9L857.6,117.8Z" },
  "51": { name: "Virginia", bounds: [719.8, 259.1, 862.5, 338.7], path: "M855.5,283.8L856.1,282.7L862.5,280.5L861.3,284.3L860.9,284.9L859.9,284.8L859.2,285.8L858.4,288.2L858.1,291.3L858.5,292.2L857.6,294.8L858.1,294.9L857.3,297.9L856.4,299L856.7,300.1L856.6,301.3L855.7,303.1L854.5,303.5L854.2,304.2L853.9,302.7L852.6,300.7L852.5,299L852.8,298.1L852.6,296.6L852.9,292.1L854.1,288.5L853.7,287.9L854.9,287.3L855.6,285.9L855,285.1L854.2,285.2L855.5,283.8ZM849.9,285L849.4,286L848.9,285.2L849.9,285ZM747.1,313.2L747.9,313.7L746.8,314.7L748,315.5L748.2,316.7L750,318.6L751.1,318.5L753.4,320.1L755.4,319.7L757.2,317.9L757.8,317.8L758.5,316.2L761.3,318.1L763.1,316.8L766.7,315.4L767.5,314.5L766.8,313.8L767,312.7L768.8,313.7L769.9,313L772.3,310.8L773,310.5L773.8,311.7L776.6,309.3L776.8,308.7L775.9,308.7L775.9,308.1L777.5,306.3L776.6,306.1L776,305.1L776.6,304.1L776.4,303.6L776.9,302.2L778.9,298.8L780,297.5L780.8,294.6L780.4,294.1L781.7,291.4L782.6,290.6L782.1,289.8L783.1,288.5L783.7,286.6L783.4,285.7L783.8,282.9L785.9,283.4L787.3,285.4L790.3,285.9L791.8,283.8L791.7,283L792.6,279.7L793.1,279.6L792.9,278.7L793.4,276.5L794,275L796.6,276.6L797.4,273.6L798.4,272.4L798.6,272.9L799.9,270.9L800.3,271.2L801,269.9L800.6,269.6L802.9,266L802.1,265.4L802.6,264.3L802.2,264L803.2,261.6L802.6,259.1L812.9,264.9L813.5,261.1L813.9,260.3L815.8,260.4L816.6,260.2L817.3,261L818.7,261.5L818.2,262.7L818.2,264.2L819.4,265L821.5,264.9L823.4,265.5L823.4,266.3L825.3,266.4L825.9,267L826.9,267.6L827.8,268.6L827.9,269.9L828.2,271.6L826.8,272.9L827.1,273.8L825.9,274.4L825.1,274L825.3,275.2L824.6,277.5L824.5,278.6L825.8,280.9L827.8,280.4L829.1,279.6L829.6,278.7L830.3,279.2L830.2,280.7L831.7,281.7L831.9,282.6L834.2,283.3L835.6,283L836.4,283.5L836.7,283L838.2,282.9L838.6,283.7L839.9,284.3L840.5,285.2L841.3,285.4L842.5,286.2L843.8,286.4L845.9,287.3L846,288.6L845.1,289.3L845.8,292L845.3,292.9L846.2,293.2L845.1,294L842.9,293.2L842.3,293.8L840.5,291.3L838.2,290.5L836,288.5L835.3,288.5L834.9,287.6L833.9,287.2L834,287.8L836,289.2L837.7,291.1L838.9,291.9L840,291.9L841.2,294L842.2,294.6L843.8,294.2L844.4,294.8L846.4,294.9L845.5,296.1L846.2,296.5L847,296L847.8,297.3L848.2,298.6L848,300.4L846.7,299.4L845.1,298.9L844.8,299.8L846.3,301.4L846.9,301.5L844.5,302.6L845,303.3L846.3,302.8L846.5,304.2L847.4,303.8L848.6,304.6L849.2,305.5L849,307.5L848.3,307.3L847.3,308.7L846,307.5L844,306.7L842.9,306L842.9,305L841.9,303.8L840.5,304.2L840.1,304.8L839.3,304.1L838.1,304.1L837.8,303.7L836.6,304.6L837.4,305.1L839.3,304.9L840.5,305.7L841.1,305.7L841.3,304.4L842.3,306.3L842.2,307.4L842.8,307.9L843.9,307.9L846,309.2L846.3,310.5L848,310L848.5,309.4L849.3,310.1L848.8,308.5L849.8,308.1L850.4,308.5L853.1,308.8L854.4,308L854.9,308.3L856.3,311.5L858,314.2L858.8,315.9L842.2,319.4L840.3,320L812.1,325.5L794.2,328.7L780.3,331.1L772.9,331.8L770.6,332.3L764.5,333L761,333.5L755.5,334L756,333.4L751,334L750.9,334.5L737.3,336.5L727.2,337.9L726.9,337.8L719.8,338.7L720.2,338.2L722.1,336.9L724.1,336.6L726,335.3L727.9,334.4L729,334.2L728.9,333.3L729.8,331.5L731.6,331.2L733.1,330.3L733.3,329.3L733,328.2L734.4,327.3L735.4,326.3L735.2,324.6L737.9,322.3L739.6,321.1L741.2,320.4L747.1,313.2Z" },
  "53": { name: "Washington", bounds: [63, 13, 183.6, 102.4], path: "M93.2,50.9L94,49L94.9,47.8L95.3,48.9L94.8,50.2L95.7,50.9L94.2,51.5L93.2,51.4L93.2,50.9ZM98.7,24.6L99,23.8L99.8,24.9L98.8,25.1L98.7,24.6ZM98.9,20.3L99.2,20.2L100,22.7L99.3,21.6L98.9,20.3ZM97.7,23.5L98.2,23L98.6,24.1L97.7,24.5L97.7,23.5ZM95,31L97.2,28.7L97.7,27.7L98.5,27.7L98.5,29.1L99.3,30.6L98.5,30.7L98,30.2L95.8,31.6L97.1,31.7L97.4,32.7L97.5,34.3L97.2,34.6L97.1,36.6L98.3,35.1L98.9,36.4L99.6,36.9L99.5,38.7L98.7,39.7L98.1,39.2L97.9,37.5L96.7,37.6L96.9,37L96.2,36L96.8,34.3L96.8,33.1L95.9,33L95,31ZM95.5,17.9L97.5,19.7L96.1,19L95.5,17.9ZM93.6,19.6L94.6,19.3L94.5,20L93.6,19.6ZM95.2,13L96.1,13.8L95.2,13.6L95.2,13ZM91,21.2L91.5,20.8L92.6,21.1L93.1,22.5L94,22.9L93.4,21.4L95.9,19.9L96.5,20.1L98.1,21.8L96.9,22.4L97.1,23.8L96.7,24.9L96,25.2L95.6,26.6L94.7,26.5L94.2,25.3L92.6,24.9L91.6,23.8L91,21.2ZM91.1,19.1L91.8,19.4L92.7,20.8L91.1,19.1ZM183.6,35.9L180.5,49.6L178.3,58.7L174.5,75.8L170.8,92.4L170.1,94.1L170.9,95.6L171.3,98.5L170.4,99.9L170.5,102.4L151.9,98L138.7,94.8L138.3,95.2L136.2,95.7L134.3,95.1L130.5,94.9L129.4,94.2L128.5,94.4L127.5,95.3L125.4,95L122.8,94.9L120.9,95.3L119.3,95.4L118.4,96L115.3,95.9L113.8,95.4L113.2,94.4L112,93.9L111,94.3L108.2,94.6L107.5,95.1L106.8,94.6L104.6,94.2L103.6,94.8L102.8,94.7L102.7,93.1L101.1,91.9L100,91.9L98.2,90.6L94.9,90.5L93.8,89.9L92.9,89.9L92,90.6L88.6,91.3L87.3,91.1L86.2,91.5L84.9,91.1L84.3,90.3L82.9,89.8L80.1,88.1L79,86.8L79.7,84.1L79.5,83.3L80,82.1L80.1,80L79.6,78.2L79.5,76.9L77,73.8L76.2,73.5L74.2,73.9L72.9,73.5L72.2,72.4L72.6,71.4L72,70.3L71,70.2L69.2,69.5L68.6,68.5L67.9,68.9L67.2,68.5L65.9,69.2L65.4,68.9L64.7,67.2L64.2,66.9L63,67.6L64.1,65.2L64.8,62.9L65.5,59.8L65.9,61.1L65.2,62.9L64.7,65.5L65.6,65.8L65.5,64.2L65.9,63.1L66.4,63.7L67.5,62.7L67.2,60.2L68,59.6L69.7,59L69,58L68.5,58.4L67,58.6L65.9,57.2L66.3,55.8L66.3,53.6L67,53.9L66.8,54.6L68.8,53.9L70.7,53.9L70.3,53.2L68.7,52.3L68.8,51.4L67.5,50.7L66.9,51L66.8,52.8L65.8,52.9L66.9,49.9L67.2,47.5L67.4,44.9L66.6,43L67.3,38.8L67.6,34.1L67,33.4L67.2,32.3L66.4,30.9L65.7,30.2L65.5,28.3L66.2,25.4L66,23.6L66.5,23.5L68.1,20.5L67.4,19.1L68.6,19.3L69.7,20.2L71.9,22.8L73.2,23.9L73.8,23.9L75.5,25.5L75.3,25.8L76.9,27.1L78.6,27.9L81,28.3L82.4,29.5L84.7,30L85.2,30.8L87.3,31.4L88.9,30.7L90,32.1L90.2,33L92,33.3L91.7,33.8L92.3,34.5L92,35.6L92.6,35.6L93.1,34.7L92.5,33.8L92.7,33.1L94.6,32.9L94.6,33.5L93.7,33.9L93.9,35L95.3,34L95.2,36L94.3,36L94.7,37.2L94.7,38.5L95.3,39.1L93.9,39.1L93.8,39.9L92.7,40.3L92.2,41.5L91,42.7L90.8,42.3L92,40.3L91.1,40.4L89.7,42.4L88.2,43.4L85.2,46.2L83.8,48.2L85.7,48.9L87.7,48.6L88.5,48L85.4,48.4L84.6,47.6L88.1,44.1L90.1,43.1L91.8,43.1L92.4,41.8L93.6,40.7L95.1,39.7L95.6,39.9L95.7,37.9L96.6,39L96.2,42.7L95.2,42.4L95.6,43.3L95.1,44.6L95.1,46L94.2,46.5L93.9,47.2L94.6,47.7L93.8,48.4L93.1,50L93.2,50.4L92.3,51.5L92.4,52.4L91.2,53.6L90.2,51.8L91.1,50.1L90.1,50.6L89.4,51.7L89.5,52.7L90.5,53.7L89.9,53.8L89.1,55.2L88.4,54L87.9,51.7L88.7,51.2L89.1,50.1L87.6,51.3L87.6,52.8L87,53.6L87.8,53.5L88,54.9L89.4,55.7L90.5,54.6L91.1,54.5L92.8,52.3L92.8,51.7L93.9,53.2L94.5,52.2L96.1,51.9L96.4,48.9L96.1,46.6L97.5,46.2L96.5,44.8L97.8,43.5L98,41.7L99,41.1L100.1,39L101.5,38.7L101.7,37.6L101.1,36.9L100.3,34.9L100.8,33.6L100.5,32.6L99.7,32.3L99.1,33.1L99.2,34.5L100,36.3L98.9,34.4L98.2,34.1L98.2,33L98.7,31.6L99.8,31.4L100.5,32L101.2,31.4L100.9,30.4L99.7,29.2L99.3,28.1L99.5,27.4L97.9,27.5L97.5,26.4L98,25.3L99.1,25.3L99.7,25.8L99.9,26.8L100.9,27L101,24.9L101.9,25L102.4,24.4L101.6,22.9L101.7,21.6L102.4,20.9L101.9,20.2L100.9,20L99.6,20.5L100.2,19.7L99.4,19.2L99.6,17.7L98.9,16.8L99.8,16L98.8,15.5L100,14.4L109.6,17.1L114.6,18.6L122.2,20.6L129.7,22.6L140.1,25.4L152.8,28.6L166.5,31.9L183.6,35.9Z" },
  "54": { name: "West Virginia", bounds: [733.2, 239.2, 813.9, 320.1], path: "M733.2,294.8L734.4,295L736.5,293.9L737.9,293.5L738,290.5L738.2,290.1L739.7,289.8L739.9,289.3L739.5,287.3L738.6,285.4L739.7,284.2L739.5,282.9L740.2,281L741.4,279.5L742.1,280.3L742.8,280.3L743.6,281.3L743.2,282.2L744,282.7L745,280.9L746,281.3L745.5,280.4L745.7,279.4L744.6,277.8L745.7,277.3L745.2,275.5L746.2,274.2L746.4,273.1L748.1,273L748.1,271.4L749.8,269.4L750.9,270.6L751.7,270.6L752.9,269.5L753.7,269.4L754.2,268.3L754.9,267.9L755.8,266.1L757.8,263.4L758.8,263L758.7,261.6L759.2,260.8L758.5,260.1L759,259L758.8,258L759.3,257.4L758.9,256.6L759.8,256.2L759.8,254.9L759.5,252.5L759.9,251.9L759.8,250.6L760.3,248.4L760.8,248L760.9,246.6L760.4,244.8L760.5,243.2L759.7,241.8L758.9,241L759.2,240L761.1,239.2L764.5,259.9L775.9,258L782.3,256.9L784.1,268.5L784.9,268.1L785.6,266.9L786.7,265.8L787.1,265.8L787.6,264.4L789.2,262.9L789.7,261.4L790.8,261.2L792.3,261.6L794.3,257.4L794.2,256.7L795.4,257L794.7,257.4L797,258.6L798.6,258.6L800.4,258.3L800.8,257.3L800.4,256.6L801.2,256.5L801.8,255.2L803.3,255.4L804.5,253.4L805.7,253.5L807.7,255L808.8,254.4L810.8,254.4L810.9,255.1L810.1,255.4L810.6,256.4L812.3,257.3L812.9,258.1L813.2,260.2L813.9,260.3L813.5,261.1L812.9,264.9L802.6,259.1L803.2,261.6L802.2,264L802.6,264.3L802.1,265.4L802.9,266L800.6,269.6L801,269.9L800.3,271.2L799.9,270.9L798.6,272.9L798.4,272.4L797.4,273.6L796.6,276.6L794,275L793.4,276.5L792.9,278.7L793.1,279.6L792.6,279.7L791.7,283L791.8,283.8L790.3,285.9L787.3,285.4L785.9,283.4L783.8,282.9L783.4,285.7L783.7,286.6L783.1,288.5L782.1,289.8L782.6,290.6L781.7,291.4L780.4,294.1L780.8,294.6L780,297.5L778.9,298.8L776.9,302.2L776.4,303.6L776.6,304.1L776,305.1L776.6,306.1L777.5,306.3L775.9,308.1L775.9,308.7L776.8,308.7L776.6,309.3L773.8,311.7L773,310.5L772.3,310.8L769.9,313L768.8,313.7L767,312.7L766.8,313.8L767.5,314.5L766.7,315.4L763.1,316.8L761.3,318.1L758.5,316.2L757.8,317.8L757.2,317.9L755.4,319.7L753.4,320.1L751.1,318.5L750,318.6L748.2,316.7L748,315.5L746.8,314.7L747.9,313.7L747.1,313.2L744.4,313.1L744,312.4L742.6,311.9L741.9,311.1L740.9,311.1L739.7,308.6L738.1,307.4L738,306.6L737,306.3L736.4,305.6L736.9,304.4L735.9,304.1L735.1,302.6L733.8,301.7L733.2,300.7L733.7,300.5L733.5,299L734.1,298.3L734,297.1L733.4,296.5L733.2,294.8Z" },
  "55": { name: "Wisconsin", bounds: [547.4, 111.5, 643.9, 215.4], path: "M641.9,146.3L642.2,144.7L643.9,144.9L642.9,146.9L641.9,146.3ZM635.6,150.4L636.2,150L636.5,151.2L635.6,150.4ZM584,113.3L584.4,111.6L585,111.5L584.8,113L584,113.3ZM583.2,116.2L584.4,115.4L584.2,116.2L583.2,116.2ZM581.2,115.2L583.1,114.1L582.8,115.3L581.5,115.6L581.2,115.2ZM579.6,117.2L580.8,115.8L580.9,116.2L579.6,117.2ZM579.8,114.4L580.7,115.4L579.9,115.5L579.8,114.4ZM579.1,113L581.1,112.2L581.8,113.3L582.5,112.6L582.7,113.4L581.8,113.6L580.9,114.6L579.1,113ZM579.2,118.5L580.1,118.1L581.8,116.3L582.6,116.9L581,117.6L581.3,118.2L580.4,118.4L579.3,119.2L579.2,118.5ZM576,114.1L576.8,113.7L576.8,114.6L576,114.1ZM560.2,121.1L561.4,121.7L563.3,121.4L567.1,119.7L568,119.6L572.6,117L573.3,117.4L575.2,116.3L576.2,115.1L577,115.3L578.3,114.6L579.7,116.1L579.1,117.6L577.8,119.2L578.4,120.4L577.4,121.4L577,122.8L577.7,123.1L580,121.6L580.2,120.5L582.7,122.4L585.3,123.1L585.8,123.8L586.7,123.3L586.9,124L588.3,124.2L589.4,125.7L590.3,128L606.7,131.4L610.7,133.3L611.9,133.8L612.5,133.4L614.5,134.2L614.6,133.5L616.1,133.4L617.7,134.2L618.2,133.8L619.6,134.6L620.3,134.3L622.7,135L623.2,136.3L622.3,137.4L623.1,138.1L624.6,137.7L625.2,138.5L626.1,138.4L627.7,139.4L628.2,140.2L627.6,140.9L628.4,141.7L628.2,142.7L627.7,142.6L628.4,144L628.1,145L627.4,145.7L627.3,147L628,147.6L629.3,147.5L630.2,146.5L631,147.6L630.4,148.6L629.9,151.5L631.2,152.8L632.4,153L631.9,154.2L632,155.7L629,156.6L629,158L628,159.5L627.5,161.2L626.9,162.1L626.6,164L626.8,164.6L626.2,165.6L626.8,166.2L628.1,166.1L628.4,165.1L629.8,163.7L630.6,163.3L631.1,161.6L632.6,158.9L635.3,157.4L635.8,158.1L635.7,157.1L636.3,155.1L637.6,152.9L637.9,150.9L638.5,150.9L639.7,150.2L639.7,148.7L640.5,147.8L641.6,147.6L641.8,149.4L641,149.3L641,152.4L639.9,153.2L639.8,154.2L639.1,155.3L639.4,156.1L638.8,156.9L639,157.4L638.1,158.2L637.6,159.2L637,161.6L635.5,165.1L634.7,170.5L635.5,172.5L635.4,173.6L633.5,175.5L632.5,180.8L632.8,182.3L633.3,183.3L633.4,185.3L632.3,187.7L632.1,190.4L631.3,192L630.8,195.3L631.5,197.1L631.2,197.9L631.9,199.2L631.5,200L631.7,200.9L632.6,202.2L632.6,203.4L633.1,204.6L634.1,205.7L634,207.4L633.6,209.6L634.2,212.4L628.9,212.7L617.8,213.7L610.1,214.1L596.4,214.8L587,215.4L586.6,214L585.6,212.4L581.9,211.7L579.9,210.5L579,207.2L578.2,206.8L578.1,205.5L577.6,203.8L577.4,201.6L579.2,198.7L578.4,197.4L576.5,196.3L576.7,195.2L576.1,194.3L576.3,193.3L575.8,192.2L576,191.4L575.4,190.7L575.3,188.6L575.6,187.1L574.9,185.5L572.3,182.2L569.8,181.6L567.6,179.6L565.8,178.6L564.9,177.8L563.9,174.9L561.8,173.4L559.2,172.7L558,171.8L557.5,170.5L556.9,170.1L553.6,169.9L553.3,169.1L550.5,166.7L549.3,165.9L550,163.9L549.8,162.7L550.1,161.7L549.8,159.6L549.4,158.4L550.1,157.8L549.7,155.9L549.7,153.6L550.6,152.6L551.4,151.1L551.3,149.9L549.3,147.4L547.5,147.3L547.4,145.8L547.6,144L548.9,142.9L549.2,141.5L550.1,139.9L551.1,139L552.5,138.5L552.9,137.8L553.7,138L554.2,136.9L555.6,136.9L555.9,135.8L556.4,135.6L555.9,122.3L557.4,122.4L557.5,121L559,120.2L560.2,121.1Z" },
  "56": { name: "Wyoming", bounds: [243.5, 142, 369.1, 246.5], path: "M369.1,155.7L367.5,175.1L366.3,188.3L365.3,201L361.4,246.5L350.9,245.6L347.8,245.4L333.1,244L324.8,243.1L320.9,242.6L301.1,240.3L285.9,238.4L277.1,237.2L268.9,236.1L252.7,233.7L243.5,232.2L247.2,209.6L249,198.2L249.8,193.3L256,153.9L256.5,150.5L257.8,142L262.1,142.7L263.3,143.1L271.3,144.3L272.8,144.3L278.5,145.2L288.8,146.5L289.1,146.7L298.3,148L320,150.7L320.8,150.9L333.9,152.4L339.2,153L339.5,152.8L357.8,154.7L369.1,155.7Z" },
};
